"""Short paths through certified expanders and consecutive path systems.

The connector is plain multi-source BFS with an avoidance set; what makes it
interesting is the contract: inside a graph whose robust expansion was
verified exhaustively, set-to-set paths between large enough sets must stay
short, and a violation means the certificate lied, so we abort loudly rather
than return the long path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .expander import ExpanderParams, ExpansionCertificate, rho
from .graphs import Graph

Path = list[int]


class PathBoundError(RuntimeError):
    """A certified expander produced a path longer than its guarantee."""


def short_path_length_bound(n: int, params: ExpanderParams) -> float:
    """Guaranteed connection length (2/eps1) * log^3(15n/t) between sets of
    size >= t/2 once small deletion sets are accounted for."""
    return (2.0 / params.eps1) * math.log(15.0 * n / params.t) ** 3


def _bfs_set_to_set(g: Graph, sources: set[int], targets: set[int],
                    banned: set[int], depth_cap: float = math.inf) -> Path | None:
    """Deterministic BFS: sorted frontier expansion, parent = first finder.

    Returns a shortest sources->targets path, tie-broken toward smaller ids,
    or None.  ``banned`` vertices are impassable (sources/targets already
    filtered by the caller)."""
    common = sources & targets
    if common:
        return [min(common)]
    parent: dict[int, int | None] = {s: None for s in sorted(sources)}
    frontier = sorted(sources)
    depth = 0
    while frontier and depth < depth_cap:
        depth += 1
        nxt: list[int] = []
        hit: int | None = None
        for v in frontier:
            for w in g.adj[v]:
                if w in parent or w in banned:
                    continue
                parent[w] = v
                nxt.append(w)
                if w in targets and (hit is None or w < hit):
                    hit = w
        if hit is not None:
            path = [hit]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])  # type: ignore[arg-type]
            path.reverse()
            return path
        frontier = sorted(nxt)
    return None


def connect_avoiding(g: Graph, x1: Iterable[int], x2: Iterable[int],
                     w: Iterable[int] = (),
                     certificate: ExpansionCertificate | None = None) -> Path | None:
    """Shortest x1 -> x2 path in g - w, or None when separated.

    If ``certificate`` is an exhaustive, passing expansion certificate for g
    and the usual size conditions hold (both sets at least t/2 after removing
    w, and |w| within a quarter of the guaranteed expansion), the returned
    path is asserted to fit the guaranteed length bound; a violation raises
    PathBoundError because it falsifies the certificate.
    """
    wset = set(w)
    s1 = {v for v in x1 if v not in wset}
    s2 = {v for v in x2 if v not in wset}
    if not s1 or not s2:
        return None
    path = _bfs_set_to_set(g, s1, s2, wset)
    if certificate is not None and certificate.holds and certificate.mode == "exhaustive":
        params = certificate.params
        x = min(len(s1), len(s2))
        if x >= params.t / 2.0 and len(wset) <= rho(x, params) * x / 4.0:
            bound = short_path_length_bound(g.n, params)
            if path is None:
                raise PathBoundError(
                    f"certified expander separated sets of size {len(s1)},{len(s2)} "
                    f"by removing {len(wset)} vertices")
            if len(path) - 1 > bound:
                raise PathBoundError(
                    f"path length {len(path) - 1} exceeds certified bound {bound:.3f}")
    return path


def consecutive_shortest_paths(g: Graph, x: Iterable[int], r: int,
                               y: Iterable[int] = (), q: int = 1) -> list[Path]:
    """Up to q consecutive shortest paths out of X inside its radius-r ball.

    Path i is a shortest path from X to the nearest not-yet-visited vertex of
    the ball (smallest id on ties) in the ball minus all previous paths'
    non-X vertices; X itself stays available as a source throughout.  Stops
    early once no new vertex is reachable.
    """
    yset = set(y)
    xset = {v for v in x if v not in yset}
    ball = g.ball(xset, r, avoid=yset)
    paths: list[Path] = []
    used: set[int] = set()
    for _ in range(q):
        banned = yset | used | (set(range(g.n)) - ball)
        sources = xset - used
        targets = ball - xset - used
        if not sources or not targets:
            break
        path = _bfs_set_to_set(g, sources, targets - banned, banned - targets)
        if path is None:
            break
        paths.append(path)
        used.update(v for v in path if v not in xset)
    return paths


@dataclass
class GrowthReport:
    """Ball sizes around X once paths and Y are carved out of the graph."""

    sizes: list[int]
    # informational: whether exp(i^(1/4)) growth held at radius i
    exponential_flags: list[bool]

    def to_json(self) -> dict:
        return {"schema": "minorforge/growth-v1", "sizes": self.sizes,
                "exponential_flags": self.exponential_flags}


def growth_profile(g: Graph, x: Iterable[int], y: Iterable[int],
                   ps: Sequence[Sequence[int]], r: int) -> GrowthReport:
    """Sizes of the balls B^i(X) for i = 0..r in g minus Y and minus every
    path vertex outside X."""
    xset = set(x)
    carved = set(y) | {v for p in ps for v in p if v not in xset}
    sizes = []
    flags = []
    for i in range(r + 1):
        size = len(g.ball(xset, i, avoid=carved))
        sizes.append(size)
        flags.append(size >= math.exp(i ** 0.25))
    return GrowthReport(sizes=sizes, exponential_flags=flags)


@dataclass
class IntersectionReport:
    """Per-radius path intersection counts against the growing ball front."""

    counts: list[list[int]]          # counts[i][j] = |V(P_j) ∩ N(Z_i)|
    violations: list[tuple[int, int]]  # (radius i, path j) with count > i+2

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"schema": "minorforge/intersection-v1", "counts": self.counts,
                "violations": [list(v) for v in self.violations], "ok": self.ok}


def check_path_intersection_bound(g: Graph, x: Iterable[int], y: Iterable[int],
                                  ps: Sequence[Sequence[int]], r: int) -> IntersectionReport:
    """Verify that each path of a consecutive system meets the neighbourhood
    of the radius-i ball Z_i in at most i+2 vertices, for i = 0..r.

    Z_i is taken in g minus Y minus all path vertices outside X; the
    neighbourhood is taken in g minus Y only, so path vertices blocking the
    ball's growth are exactly what gets counted.
    """
    xset = set(x)
    yset = set(y)
    carved = yset | {v for p in ps for v in p if v not in xset}
    counts: list[list[int]] = []
    violations: list[tuple[int, int]] = []
    for i in range(r + 1):
        z = g.ball(xset, i, avoid=carved)
        front = g.neighborhood(z, avoid=yset)
        row = []
        for j, p in enumerate(ps):
            c = len(front & set(p))
            row.append(c)
            if c > i + 2:
                violations.append((i, j))
        counts.append(row)
    return IntersectionReport(counts=counts, violations=violations)
