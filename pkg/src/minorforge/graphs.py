"""Immutable simple graphs on dense integer vertex ids, plus the handful of
metric primitives (balls, spheres, boundaries, avoidance distances) that the
rest of the package leans on.

Vertices are always 0..n-1.  When a graph is derived from another one
(induced subgraph, contraction), the ``names`` side table remembers what each
new id was called in the parent, so results can be translated back without
carrying sparse id sets around.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    """Raised for structurally invalid graph construction or queries."""


class Graph:
    """An immutable simple undirected graph.

    Edges are stored as sorted (u, v) pairs with u < v, adjacency lists are
    sorted, and every traversal in the package visits neighbours in id order,
    which keeps all derived artifacts reproducible.
    """

    __slots__ = ("n", "edges", "adj", "names")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], names: Sequence | None = None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        if names is None:
            self.names = tuple(range(n))
        else:
            if len(names) != n:
                raise GraphError("names side table must have one entry per vertex")
            self.names = tuple(names)

    # -- basic accessors ---------------------------------------------------

    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u] if self.degree(u) <= self.degree(v) else u in self.adj[v]

    def vertices(self) -> range:
        return range(self.n)

    def average_degree(self) -> Fraction:
        """Average degree 2m/n as an exact rational."""
        if self.n == 0:
            raise GraphError("average degree of the empty graph is undefined")
        return Fraction(2 * len(self.edges), self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # -- neighbourhood and metric primitives -------------------------------

    def neighborhood(self, xs: Iterable[int], avoid: Iterable[int] = ()) -> set[int]:
        """External neighbourhood N(X) minus avoided vertices.

        Vertices of X itself are never part of N(X).
        """
        xset = set(xs)
        bad = set(avoid)
        out: set[int] = set()
        for x in xset:
            out.update(self.adj[x])
        return out - xset - bad

    def ball(self, xs: Iterable[int], radius: int, avoid: Iterable[int] = ()) -> set[int]:
        """All vertices within distance ``radius`` of X in the graph minus
        ``avoid``.  X vertices that are themselves avoided are dropped."""
        bad = set(avoid)
        cur = {x for x in xs if x not in bad}
        seen = set(cur)
        for _ in range(radius):
            nxt: set[int] = set()
            for v in cur:
                for w in self.adj[v]:
                    if w not in seen and w not in bad:
                        nxt.add(w)
            if not nxt:
                break
            seen |= nxt
            cur = nxt
        return seen

    def sphere(self, xs: Iterable[int], i: int, avoid: Iterable[int] = ()) -> set[int]:
        """Vertices at distance exactly i from X (within the avoided graph)."""
        if i == 0:
            bad = set(avoid)
            return {x for x in xs if x not in bad}
        return self.ball(xs, i, avoid) - self.ball(xs, i - 1, avoid)

    def distance(self, a: Iterable[int] | int, b: Iterable[int] | int,
                 avoid: Iterable[int] = ()) -> float:
        """Shortest-path distance between vertex sets, INF when separated."""
        asets = {a} if isinstance(a, int) else set(a)
        bsets = {b} if isinstance(b, int) else set(b)
        bad = set(avoid)
        asets -= bad
        bsets -= bad
        if not asets or not bsets:
            return INF
        if asets & bsets:
            return 0
        dist = 0
        cur = set(asets)
        seen = set(cur)
        while cur:
            dist += 1
            nxt: set[int] = set()
            for v in cur:
                for w in self.adj[v]:
                    if w in bsets:
                        return dist
                    if w not in seen and w not in bad:
                        nxt.add(w)
            seen |= nxt
            cur = nxt
        return INF

    def edge_boundary(self, xs: Iterable[int]) -> list[tuple[int, int]]:
        xset = set(xs)
        return [e for e in self.edges if (e[0] in xset) != (e[1] in xset)]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.ball([0], self.n)) == self.n

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(self.n):
            if v in seen:
                continue
            comp = sorted(self.ball([v], self.n))
            seen.update(comp)
            comps.append(comp)
        return comps

    def bipartition(self) -> tuple[set[int], set[int]] | None:
        """A proper 2-colouring (side containing the smallest vertex of each
        component listed first), or None if some component is odd."""
        color: dict[int, int] = {}
        for s in range(self.n):
            if s in color:
                continue
            color[s] = 0
            q = deque([s])
            while q:
                v = q.popleft()
                for w in self.adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        q.append(w)
                    elif color[w] == color[v]:
                        return None
        a = {v for v, c in color.items() if c == 0}
        return a, set(range(self.n)) - a

    # -- derived graphs ----------------------------------------------------

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled to 0..k-1 in sorted order.

        The names table records the parent name of each kept vertex.
        """
        ks = sorted(set(keep))
        for v in ks:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} not in graph")
        idx = {v: i for i, v in enumerate(ks)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph(len(ks), es, names=[self.names[v] for v in ks])

    def without_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        gone = {(min(e), max(e)) for e in drop}
        return Graph(self.n, [e for e in self.edges if e not in gone], names=self.names)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        return self.induced(set(range(self.n)) - set(drop))

    def with_extra_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra), names=self.names)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract edge uv; the merged vertex keeps min(u, v)'s name and the
        remaining ids shift down to stay dense.  Loops and parallels vanish."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge")
        lo, hi = min(u, v), max(u, v)

        def remap(x: int) -> int:
            if x == hi:
                return lo
            return x - 1 if x > hi else x

        es = []
        for a, b in self.edges:
            ra, rb = remap(a), remap(b)
            if ra != rb:
                es.append((ra, rb))
        names = [self.names[x] for x in range(self.n) if x != hi]
        return Graph(self.n - 1, es, names=names)


# -- constructors ------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    off = 0
    edges: list[tuple[int, int]] = []
    for g in gs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)


# -- paths -------------------------------------------------------------------


def is_path_in(g: Graph, path: Sequence[int]) -> bool:
    """True when ``path`` is a simple path of g (a single vertex counts)."""
    if len(path) == 0 or len(set(path)) != len(path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def path_interior(path: Sequence[int]) -> list[int]:
    return list(path[1:-1])


# -- text format --------------------------------------------------------------
#
# Line-oriented: "c ..." comments, one "p <n> <m>" header, then "e <u> <v>"
# edge lines and optional "f <v1> ... <vk>" face lines.


def parse_graph_text(text: str) -> tuple[Graph, list[list[int]] | None]:
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    faces: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "p":
                if n is not None:
                    raise GraphError(f"line {lineno}: duplicate header")
                n, m_declared = int(parts[1]), int(parts[2])
            elif kind == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif kind == "f":
                faces.append([int(x) for x in parts[1:]])
            else:
                raise GraphError(f"line {lineno}: unknown record {kind!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: malformed record {line!r}") from exc
    if n is None:
        raise GraphError("missing 'p <n> <m>' header")
    if m_declared is not None and m_declared != len(edges):
        raise GraphError(f"header declares {m_declared} edges, found {len(edges)}")
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"bad edge list: {exc}") from exc
    for face in faces:
        for v in face:
            if not 0 <= v < n:
                raise GraphError(f"face vertex {v} out of range")
    return g, (faces if faces else None)


def format_graph_text(g: Graph, faces: Sequence[Sequence[int]] | None = None,
                      comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"c {line}")
    out.append(f"p {g.n} {len(g.edges)}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    if faces:
        out.extend("f " + " ".join(str(v) for v in face) for face in faces)
    return "\n".join(out) + "\n"


def to_dot(g: Graph, highlight: dict[int, str] | None = None, name: str = "g") -> str:
    """GraphViz text export; ``highlight`` maps vertex -> color name."""
    lines = [f"graph {name} {{"]
    hl = highlight or {}
    for v in range(g.n):
        attrs = f' [label="{g.names[v]}"' if g.names[v] != v else " ["
        if v in hl:
            attrs += f'{"" if attrs.endswith("[") else ", "}style=filled, fillcolor={hl[v]}'
        attrs += "]"
        if attrs == " []":
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v}{attrs};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
