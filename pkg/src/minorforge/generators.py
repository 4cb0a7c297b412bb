"""Host-graph constructions and the invariants that bound minor containment.

The planar chain generator builds its face walks by hand instead of calling
an embedder: every clique block contributes three inner triangles and one
arc of the shared outer face, with bridge and pendant edges walked twice.
That keeps the output self-certifying (the Euler count is checked before
returning).

``minor_degree_bounds`` turns the independence statistics of a pattern into
a window on the average degree needed to force it as a minor: few
independent vertices make the pattern dense and hard to avoid from below,
while a large induced-bipartite part caps how much degree the pattern can
soak up from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, GraphError
from .planar import PlanarEmbedding


def gen_complete_bipartite(s: int, n: int) -> Graph:
    """K_{s, n-s} with the small side on vertices 0..s-1."""
    if not 0 < s < n:
        raise GraphError("need 0 < s < n")
    return Graph(n, [(i, j) for i in range(s) for j in range(s, n)])


def gen_grid(dims: list[int]) -> Graph:
    """Cartesian product of paths, one per entry of ``dims``; gen_grid([a])
    is the path P_a and gen_grid([2, 2]) the four-cycle."""
    if not dims or any(s < 1 for s in dims):
        raise GraphError("grid needs positive dimensions")
    n = 1
    for s in dims:
        n *= s
    stride = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        stride[i] = stride[i + 1] * dims[i + 1]
    edges = []
    for v in range(n):
        for i, s in enumerate(dims):
            if (v // stride[i]) % s + 1 < s:
                edges.append((v, v + stride[i]))
    return Graph(n, sorted(edges))


def gen_disjoint_cliques(q: int, copies: int) -> Graph:
    """``copies`` disjoint copies of the complete graph K_q."""
    if q < 1 or copies < 1:
        raise GraphError("clique size and copy count must be positive")
    edges = []
    for c in range(copies):
        off = c * q
        edges.extend((off + i, off + j) for i, j in combinations(range(q), 2))
    return Graph(q * copies, edges)


def gen_planar_with_k4s(t: int) -> Graph:
    """A connected planar graph on t >= 4 vertices holding floor(t/4)
    vertex-disjoint copies of K4.

    Block i lives on 4i..4i+3 with 4i+2 drawn inside the triangle of the
    other three.  Leftover vertices sit as a path on the link between the
    first two blocks (or hang off the single block when t < 8); remaining
    blocks chain by direct bridges.  Face walks are built explicitly and
    the embedding is validated before the graph is returned.
    """
    if t < 4:
        raise GraphError("need t >= 4")
    k = t // 4
    edges: list[tuple[int, int]] = []
    faces: list[list[int]] = []
    for i in range(k):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges.extend([(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)])
        faces.extend([[a, b, c], [b, d, c], [a, c, d]])
    spare = list(range(4 * k, t))
    # link block 0 to block 1 through the spare path, then direct bridges
    link = [3] + spare + [4] if k > 1 else [3] + spare
    edges.extend((link[i], link[i + 1]) for i in range(len(link) - 1))
    for i in range(1, k - 1):
        edges.append((4 * i + 3, 4 * i + 4))

    # outer walk: each block's a,b,d arc going out, bridges and the spare
    # path walked once each way, closing over the a-d edges coming back
    outer = [0, 1, 3] + spare
    for i in range(1, k):
        outer.extend([4 * i, 4 * i + 1, 4 * i + 3])
    for i in range(k - 1, 0, -1):
        outer.extend([4 * i, 4 * i - 1] if i > 1 else [4])
    if k > 1:
        outer.extend(reversed(spare))
        outer.append(3)
    elif spare:
        outer.extend(spare[-2::-1])
        outer.append(3)
    faces.append(outer)

    emb = PlanarEmbedding(Graph(t, sorted(edges)), faces)
    bad = emb.validate()
    if bad:
        raise AssertionError(f"chain generator broke its embedding: {bad[0]}")
    return emb.graph


# ---------------------------------------------------------------------------
# invariants


@dataclass
class GraphStats:
    n: int
    m: int
    average_degree: float
    max_degree: int
    independence: int
    independence2: int          # largest union of two independent sets
    chromatic: int
    exact: bool

    def to_json(self) -> dict:
        return {"schema": "minorforge/stats-v1", "n": self.n, "m": self.m,
                "average_degree": self.average_degree,
                "max_degree": self.max_degree,
                "independence": self.independence,
                "independence2": self.independence2,
                "chromatic": self.chromatic, "exact": self.exact}


EXACT_STATS_CAP = 18


def _max_independent(adj_mask: list[int], n: int) -> int:
    best = 0

    def rec(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        # branch on a highest-degree available vertex for tighter pruning
        v = max((u for u in range(n) if avail >> u & 1),
                key=lambda u: (adj_mask[u] & avail).bit_count())
        rec(avail & ~(1 << v) & ~adj_mask[v], size + 1)
        rec(avail & ~(1 << v), size)

    rec((1 << n) - 1, 0)
    return best


def _greedy_independent(g: Graph, adj: list[set[int]],
                        skip: set[int] = frozenset()) -> set[int]:
    picked: set[int] = set()
    blocked: set[int] = set(skip)
    for v in sorted(range(g.n), key=lambda u: (len(adj[u]), u)):
        if v not in blocked:
            picked.add(v)
            blocked.add(v)
            blocked.update(adj[v])
    return picked


def _max_induced_bipartite(adj_mask: list[int], n: int, floor: int = 0) -> int:
    """Largest vertex set inducing a bipartite subgraph, equivalently the
    largest union of two independent sets."""
    best = floor

    def rec(i: int, a_mask: int, b_mask: int, size: int):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = size
            return
        bit = 1 << i
        if not adj_mask[i] & a_mask:
            rec(i + 1, a_mask | bit, b_mask, size + 1)
        if not adj_mask[i] & b_mask:
            rec(i + 1, a_mask, b_mask | bit, size + 1)
        rec(i + 1, a_mask, b_mask, size)

    rec(0, 0, 0, 0)
    return best


def _chromatic_exact(g: Graph) -> int:
    if g.m() == 0:
        return min(g.n, 1) if g.n else 0
    if g.bipartition() is not None:
        return 2
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def colourable(k: int) -> bool:
        colour: dict[int, int] = {}

        def rec(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            used = {colour[u] for u in g.adj[v] if u in colour}
            top = max(colour.values(), default=-1)
            for c in range(min(top + 1, k - 1) + 1):
                if c not in used:
                    colour[v] = c
                    if rec(i + 1):
                        return True
                    del colour[v]
            return False

        return rec(0)

    for k in range(3, g.n + 1):
        if colourable(k):
            return k
    return g.n


def _chromatic_greedy(g: Graph) -> int:
    colour: dict[int, int] = {}
    for v in sorted(range(g.n), key=lambda u: -g.degree(u)):
        used = {colour[u] for u in g.adj[v] if u in colour}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return max(colour.values(), default=-1) + 1


def graph_stats(g: Graph, exact_cap: int = EXACT_STATS_CAP) -> GraphStats:
    """Counting invariants; provably optimal up to ``exact_cap`` vertices,
    greedy bounds above (independence numbers from below, chromatic from
    above, flagged inexact)."""
    avg = float(g.average_degree()) if g.n else 0.0
    adj = [set(g.adj[v]) for v in range(g.n)]
    if g.n <= exact_cap:
        mask = [0] * g.n
        for v in range(g.n):
            for u in g.adj[v]:
                mask[v] |= 1 << u
        alpha = _max_independent(mask, g.n)
        alpha2 = _max_induced_bipartite(mask, g.n, floor=alpha)
        chrom = _chromatic_exact(g)
        exact = True
        assert alpha <= alpha2 <= 2 * alpha and alpha2 <= g.n
        assert chrom * alpha >= g.n
    else:
        first = _greedy_independent(g, adj)
        alpha = len(first)
        if g.bipartition() is not None:
            alpha2 = g.n  # both colour classes are independent
        else:
            alpha2 = alpha + len(_greedy_independent(g, adj, skip=first))
        chrom = _chromatic_greedy(g)
        exact = False
    return GraphStats(g.n, g.m(), avg, g.max_degree(), alpha, alpha2,
                      chrom, exact)


@dataclass
class DegreeBounds:
    t: int
    alpha: int
    alpha2: int
    lower: int
    upper: int
    witness_s: int
    exact: bool

    def to_json(self) -> dict:
        return {"schema": "minorforge/bounds-v1", "t": self.t,
                "alpha": self.alpha, "alpha2": self.alpha2,
                "lower": self.lower, "upper": self.upper,
                "witness_s": self.witness_s, "exact": self.exact}


def minor_degree_bounds(h: Graph, stats: GraphStats | None = None) -> DegreeBounds:
    """Average-degree window forcing an |h|-vertex pattern with the given
    independence statistics as a minor.

    Lower bound 2t - 2*alpha - 2: a complete bipartite host K_{s, n-s}
    with s = t - alpha - 1 is too shallow to host the pattern, since any
    model would need more than alpha branch sets inside the independent
    side, yet its average degree approaches 2s.  Upper bound 2t - alpha2:
    beyond it the pattern is unavoidable.  The window is never empty
    because alpha2 is at most 2*alpha.
    """
    if stats is None:
        stats = graph_stats(h)
    t = h.n
    lower = 2 * t - 2 * stats.independence - 2
    upper = 2 * t - stats.independence2
    if lower > upper:
        raise AssertionError("bound window inverted; independence stats broken")
    return DegreeBounds(t, stats.independence, stats.independence2,
                        lower, upper, t - stats.independence - 1, stats.exact)
