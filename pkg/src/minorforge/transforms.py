"""Degree and parity surgery that preserves the original graph as a minor.

Two constructions, both reversible by contracting recorded link edges:

* ``split_high_degree`` repeatedly replaces a vertex of degree above k by an
  adjacent pair, handing k-1 of its edges to the new vertex.  Each split
  drops the offender's degree by k-2, so k must be at least 3.

* ``bipartite_double`` makes any graph bipartite: vertices already carrying
  a valid 2-colouring keep one copy, the rest are doubled into an adjacent
  pair with one copy per side.  Every original edge is re-homed to exactly
  one copy, so contracting the pairs gives back the input on the nose, not
  just up to multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, GraphError


@dataclass
class SplitResult:
    graph: Graph
    links: list[tuple[int, int]]        # contractible edges, (survivor, clone)
    origin: dict[int, int]              # vertex of graph -> vertex of input

    @property
    def splits(self) -> int:
        return len(self.links)

    def recover_edges(self) -> set[tuple[int, int]]:
        """Edge set after contracting every link, in input labels."""
        out: set[tuple[int, int]] = set()
        for u, v in self.graph.edges:
            a, b = self.origin[u], self.origin[v]
            if a != b:
                out.add((min(a, b), max(a, b)))
        return out

    def to_json(self) -> dict:
        return {"schema": "minorforge/split-v1",
                "n": self.graph.n, "edges": self.graph.edges,
                "links": self.links,
                "origin": {str(k): v for k, v in self.origin.items()}}


def split_high_degree(g: Graph, k: int) -> SplitResult:
    """Split vertices of degree above k until none remain.

    The worst offender is split first (ties to the smaller id) and the new
    vertex takes over the k-1 smallest-id neighbours.  Afterwards the input
    is recovered exactly by contracting the recorded links.
    """
    if k < 3:
        raise GraphError("split target degree must be at least 3; a split "
                         "removes k-2 incident edges per round")
    n = g.n
    adj: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(n)}
    origin = {v: v for v in range(n)}
    links: list[tuple[int, int]] = []
    while True:
        deg, v = max(((len(adj[u]), -u) for u in adj), default=(0, 0))
        v = -v
        if deg <= k:
            break
        w = n
        n += 1
        moved = sorted(adj[v])[:k - 1]
        adj[w] = set(moved) | {v}
        for u in moved:
            adj[u].discard(v)
            adj[u].add(w)
        adj[v] = (adj[v] - set(moved)) | {w}
        origin[w] = origin[v]
        links.append((v, w))
    edges = sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})
    names = [origin[v] for v in range(n)]
    return SplitResult(Graph(n, edges, names=names), links, origin)


@dataclass
class TwoColorResult:
    a: list[int]
    b: list[int]
    removed: list[int]
    exact: bool

    def to_json(self) -> dict:
        return {"schema": "minorforge/two-color-v1", "a": self.a, "b": self.b,
                "removed": self.removed, "exact": self.exact}


EXACT_TWO_COLOR_CAP = 18


def two_color_classes(g: Graph, exact_cap: int = EXACT_TWO_COLOR_CAP) -> TwoColorResult:
    """A 2-colouring of the largest induced bipartite subgraph.

    Up to ``exact_cap`` vertices the removal set is provably minimum
    (smallest, then lexicographically first).  Above the cap vertices on
    offending odd closed walks are shed greedily and ``exact`` is False.
    """

    def colour(keep: list[int]) -> tuple[list[int], list[int]] | None:
        sides = g.induced(keep).bipartition()
        if sides is None:
            return None
        return sorted(keep[i] for i in sides[0]), sorted(keep[i] for i in sides[1])

    if g.n <= exact_cap:
        for k in range(g.n + 1):
            for removed in combinations(range(g.n), k):
                keep = [v for v in range(g.n) if v not in removed]
                got = colour(keep)
                if got is not None:
                    return TwoColorResult(got[0], got[1], list(removed), True)
        raise AssertionError("empty graph is bipartite")  # unreachable

    removed: list[int] = []
    keep = list(range(g.n))
    while True:
        got = colour(keep)
        if got is not None:
            return TwoColorResult(got[0], got[1], sorted(removed), False)
        # find one odd-parity edge via BFS layers and shed its busiest endpoint
        sub = g.induced(keep)
        level = {0: 0}
        queue = [0]
        offender = None
        while queue and offender is None:
            x = queue.pop(0)
            for y in sub.adj[x]:
                if y not in level:
                    level[y] = level[x] + 1
                    queue.append(y)
                elif (level[x] + level[y]) % 2 == 0:
                    offender = max((x, y), key=lambda z: sub.degree(z))
                    break
        if offender is None:
            # odd cycle in a later component; rotate keep order
            comp = next(c for c in sub.components()
                        if sub.induced(sorted(c)).bipartition() is None)
            offender = max(comp, key=lambda z: sub.degree(z))
        removed.append(keep[offender])
        keep = [v for i, v in enumerate(keep) if i != offender]


@dataclass
class DoubleResult:
    graph: Graph
    a_side: list[int]
    b_side: list[int]
    links: list[tuple[int, int]]        # (a-copy, b-copy) per doubled vertex
    origin: dict[int, int]
    coloring: TwoColorResult = field(repr=False)

    def recover_edges(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for u, v in self.graph.edges:
            a, b = self.origin[u], self.origin[v]
            if a != b:
                out.add((min(a, b), max(a, b)))
        return out

    def to_json(self) -> dict:
        return {"schema": "minorforge/double-v1", "n": self.graph.n,
                "edges": self.graph.edges, "a_side": self.a_side,
                "b_side": self.b_side, "links": self.links,
                "origin": {str(k): v for k, v in self.origin.items()}}


def bipartite_double(g: Graph, coloring: TwoColorResult | None = None) -> DoubleResult:
    """Double the vertices outside a 2-colourable core to force bipartiteness.

    Coloured vertices keep their id and side.  Each outside vertex v becomes
    the pair (v, v') with v on the A side and the appended v' on B.  An edge
    from a coloured vertex lands on the copy in the opposite side; an edge
    between two outside vertices goes A-copy of the smaller id to B-copy of
    the larger.  Contracting the links recovers g exactly.
    """
    if coloring is None:
        coloring = two_color_classes(g)
    a_of = set(coloring.a)
    b_of = set(coloring.b)
    for u, v in g.edges:
        if (u in a_of and v in a_of) or (u in b_of and v in b_of):
            raise GraphError(f"colouring is not proper on edge {u}-{v}")
    outside = sorted(set(range(g.n)) - a_of - b_of)
    clone = {v: g.n + i for i, v in enumerate(outside)}
    n = g.n + len(outside)
    origin = {v: v for v in range(g.n)}
    origin.update({clone[v]: v for v in outside})

    edges: set[tuple[int, int]] = set()

    def add(u: int, v: int):
        edges.add((min(u, v), max(u, v)))

    for v in outside:
        add(v, clone[v])
    for u, v in g.edges:
        if u in a_of and v in b_of or u in b_of and v in a_of:
            add(u, v)
        elif u in a_of:
            add(u, clone[v])
        elif v in a_of:
            add(clone[u], v)
        elif u in b_of:
            add(u, v)          # v outside keeps id on the A side
        elif v in b_of:
            add(u, v)
        else:
            add(u, clone[v])   # u < v in sorted edge tuples
    names = [origin[v] for v in range(n)]
    graph = Graph(n, sorted(edges), names=names)
    a_side = sorted(a_of | set(outside))
    b_side = sorted(b_of | {clone[v] for v in outside})
    return DoubleResult(graph, a_side, b_side,
                        [(v, clone[v]) for v in outside], origin, coloring)
