"""Plane embeddings, duals, and parity-fixing subdivisions.

An embedding is stored as its face walks.  The key construction: in a
triangulation the dual is cubic and bridgeless, so it carries a perfect
matching; subdividing the matched primal edges gives every triangle exactly
one extra vertex, turning all faces into quadrilaterals and the whole graph
bipartite.  A triangulation on t vertices has 2t-4 faces, hence t-2 matched
edges and a bipartite result on exactly 2t-2 vertices.

Planarity testing and the matching itself are delegated to networkx; the
face bookkeeping, validation and subdivision surgery are done here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .graphs import Graph, GraphError


@dataclass
class PlanarEmbedding:
    graph: Graph
    faces: list[list[int]]

    @property
    def f(self) -> int:
        return len(self.faces)

    def face_edges(self, face: list[int]) -> list[tuple[int, int]]:
        k = len(face)
        return [(min(face[i], face[(i + 1) % k]), max(face[i], face[(i + 1) % k]))
                for i in range(k)] if k else []

    def validate(self) -> list[str]:
        """Violations of the embedding contract, empty when consistent.

        Checks: connected graph, every face walk follows edges, every edge
        is used by exactly two face sides, and the Euler count n - m + f = 2.
        """
        g = self.graph
        bad: list[str] = []
        if g.n and not g.is_connected():
            bad.append("connected: embedding requires a connected graph")
        count: dict[tuple[int, int], int] = {}
        for i, face in enumerate(self.faces):
            if not face and g.m():
                bad.append(f"face {i}: empty walk in a graph with edges")
                continue
            for e in self.face_edges(face):
                if not g.has_edge(*e):
                    bad.append(f"face {i}: walk uses non-edge {e}")
                count[e] = count.get(e, 0) + 1
        for e in g.edges:
            c = count.get((min(e), max(e)), 0)
            if c != 2:
                bad.append(f"edge {e}: lies on {c} face sides, expected 2")
        if g.n and g.n - g.m() + self.f != 2:
            bad.append(f"euler: n - m + f = {g.n - g.m() + self.f}, expected 2")
        return bad

    def is_triangulation(self) -> bool:
        return (self.graph.n >= 4 and not self.validate()
                and all(len(f) == 3 for f in self.faces))

    def to_json(self) -> dict:
        return {"schema": "minorforge/embedding-v1", "n": self.graph.n,
                "edges": self.graph.edges, "faces": self.faces}


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def embed_planar(g: Graph) -> PlanarEmbedding | None:
    """A plane embedding of a connected graph, or None if not planar."""
    if g.n == 0:
        return PlanarEmbedding(g, [])
    if not g.is_connected():
        raise GraphError("embedding requires a connected graph")
    if g.m() == 0:
        return PlanarEmbedding(g, [[]])
    planar, emb = nx.check_planarity(_to_nx(g))
    if not planar:
        return None
    faces: list[list[int]] = []
    seen: set[tuple[int, int]] = set()
    for u in range(g.n):
        for v in g.adj[u]:
            if (u, v) in seen:
                continue
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    out = PlanarEmbedding(g, faces)
    bad = out.validate()
    if bad:
        raise GraphError(f"embedding extraction failed: {bad[0]}")
    return out


@dataclass
class DualResult:
    graph: Graph
    shared: dict[tuple[int, int], tuple[int, int]]   # dual edge -> one primal edge

    def to_json(self) -> dict:
        return {"schema": "minorforge/dual-v1", "n": self.graph.n,
                "edges": self.graph.edges,
                "shared": {f"{a},{b}": e for (a, b), e in self.shared.items()}}


def dual_graph(emb: PlanarEmbedding) -> DualResult:
    """The face-adjacency graph. Bridges (both sides one face) contribute no
    dual edge and parallel adjacencies collapse, keeping the dual simple."""
    sides: dict[tuple[int, int], list[int]] = {}
    for i, face in enumerate(emb.faces):
        for e in emb.face_edges(face):
            sides.setdefault(e, []).append(i)
    shared: dict[tuple[int, int], tuple[int, int]] = {}
    for e, (fa, fb) in ((e, s) for e, s in sides.items() if len(s) == 2):
        if fa == fb:
            continue
        key = (min(fa, fb), max(fa, fb))
        if key not in shared or e < shared[key]:
            shared[key] = e
    return DualResult(Graph(emb.f, sorted(shared)), shared)


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    got = nx.max_weight_matching(_to_nx(g), maxcardinality=True)
    return sorted((min(u, v), max(u, v)) for u, v in got)


@dataclass
class SubdivisionResult:
    graph: Graph
    subdivided: list[tuple[int, int]]
    midpoint: dict[tuple[int, int], int]
    a_side: list[int]
    b_side: list[int]

    def to_json(self) -> dict:
        return {"schema": "minorforge/subdivision-v1", "n": self.graph.n,
                "edges": self.graph.edges, "subdivided": self.subdivided,
                "midpoint": {f"{u},{v}": m for (u, v), m in self.midpoint.items()},
                "a_side": self.a_side, "b_side": self.b_side}


def _subdivide(g: Graph, chosen: list[tuple[int, int]]) -> tuple[Graph, dict[tuple[int, int], int]]:
    chosen = sorted((min(u, v), max(u, v)) for u, v in chosen)
    midpoint = {e: g.n + i for i, e in enumerate(chosen)}
    keep = [e for e in g.edges if e not in midpoint]
    extra = [(u, m) for (u, _), m in midpoint.items()] + \
            [(v, m) for (_, v), m in midpoint.items()]
    names = [g.names[v] for v in range(g.n)] + [f"{u}*{v}" for u, v in chosen]
    return Graph(g.n + len(chosen), sorted(keep + extra), names=names), midpoint


def bipartite_subdivision(emb: PlanarEmbedding) -> SubdivisionResult:
    """Subdivide t-2 edges of a triangulation on t vertices, one per face
    pair of a perfect dual matching, leaving a bipartite graph on 2t-2
    vertices."""
    if not emb.is_triangulation():
        raise GraphError("bipartite subdivision needs a valid triangulation")
    g = emb.graph
    dual = dual_graph(emb)
    matching = maximum_matching(dual.graph)
    if 2 * len(matching) != dual.graph.n:
        raise GraphError("dual of a triangulation lost its perfect matching; "
                         "the embedding is corrupt")
    chosen = sorted(dual.shared[pair] for pair in matching)
    if len(chosen) != g.n - 2:
        raise GraphError(f"expected {g.n - 2} subdivided edges, got {len(chosen)}")
    out, midpoint = _subdivide(g, chosen)
    sides = out.bipartition()
    if sides is None:
        raise GraphError("subdivision failed to produce a bipartite graph")
    a, b = sides
    if 0 not in a:
        a, b = b, a
    return SubdivisionResult(out, chosen, midpoint, sorted(a), sorted(b))


def one_sided_subdivision(g: Graph, xs: set[int]) -> SubdivisionResult:
    """Subdivide every edge with no endpoint in the independent set xs.

    Kept edges all touch xs, so colouring xs with the fresh midpoints on one
    side and everything else on the other is always proper.
    """
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside graph")
    for u, v in g.edges:
        if u in xs and v in xs:
            raise GraphError(f"anchor set must be independent; edge {u}-{v}")
    chosen = [e for e in g.edges if e[0] not in xs and e[1] not in xs]
    out, midpoint = _subdivide(g, chosen)
    a = sorted(set(xs) | set(midpoint.values()))
    b = sorted(set(range(g.n)) - set(xs))
    return SubdivisionResult(out, chosen, midpoint, a, b)


def gen_triangulation(t: int, seed: int = 0) -> PlanarEmbedding:
    """A random maximal planar graph on t >= 4 vertices, built by repeated
    vertex insertion into a face of a growing triangulation."""
    if t < 4:
        raise GraphError("triangulations need at least 4 vertices")
    rng = random.Random(seed)
    faces = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    edges = {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
    for v in range(4, t):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces.extend([[a, b, v], [b, c, v], [c, a, v]])
        edges.update({(a, v), (b, v), (c, v)})
    emb = PlanarEmbedding(Graph(t, sorted(edges)), faces)
    bad = emb.validate()
    if bad:
        raise AssertionError(f"generator produced a bad embedding: {bad[0]}")
    return emb
