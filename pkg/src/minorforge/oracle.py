"""Exhaustive containment oracles: subdivisions, minors, and K4-freeness.

These searches are complete, so within budget they return proofs in both
directions: a witness that can be revalidated, or the verdict that none
exists.  Running out of budget is reported as its own outcome; a timeout is
never passed off as absence.

The K4 test does not search at all.  It runs the series-parallel reduction
(drop vertices of degree at most one, smooth out degree-2 vertices, merging
any parallel edge that appears) and checks whether the graph vanishes; a
leftover core of minimum degree 3 always carries a K4 minor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph

DEFAULT_ORACLE_BUDGET = 500_000


class _BudgetExhausted(Exception):
    pass


class _Meter:
    __slots__ = ("spent", "budget")

    def __init__(self, budget: int):
        self.spent = 0
        self.budget = budget

    def tick(self, k: int = 1):
        self.spent += k
        if self.spent > self.budget:
            raise _BudgetExhausted


@dataclass
class OracleResult:
    kind: str                      # "subdivision" | "minor"
    outcome: str                   # "found" | "absent" | "timeout"
    witness: dict | None
    nodes_spent: int
    budget: int

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    @property
    def decided(self) -> bool:
        return self.outcome != "timeout"

    def to_json(self) -> dict:
        return {"schema": f"minorforge/oracle-{self.kind}-v1",
                "outcome": self.outcome, "witness": self.witness,
                "nodes_spent": self.nodes_spent, "budget": self.budget}


def _degree_sequence_fits(host: Graph, pattern: Graph) -> bool:
    hd = sorted((host.degree(v) for v in range(host.n)), reverse=True)
    pd = sorted((pattern.degree(v) for v in range(pattern.n)), reverse=True)
    return (len(hd) >= len(pd)
            and all(h >= p for h, p in zip(hd, pd))
            and host.m() >= pattern.m())


# ---------------------------------------------------------------------------
# subdivisions


def validate_subdivision(host: Graph, pattern: Graph, anchors: dict[int, int],
                         paths: dict[tuple[int, int], list[int]]) -> list[str]:
    bad: list[str] = []
    if sorted(anchors) != list(range(pattern.n)):
        bad.append("anchors: must map every pattern vertex")
        return bad
    if len(set(anchors.values())) != pattern.n:
        bad.append("anchors: not injective")
    seen_interior: set[int] = set()
    anchor_vs = set(anchors.values())
    for e in pattern.edges:
        path = paths.get(e)
        if path is None:
            bad.append(f"paths: pattern edge {e} unrealised")
            continue
        if path[0] != anchors[e[0]] or path[-1] != anchors[e[1]]:
            bad.append(f"paths: endpoints of {e} do not match anchors")
        if len(set(path)) != len(path):
            bad.append(f"paths: path for {e} revisits a vertex")
        for a, b in zip(path, path[1:]):
            if not host.has_edge(a, b):
                bad.append(f"paths: {a}-{b} on path for {e} is not a host edge")
        for v in path[1:-1]:
            if v in anchor_vs:
                bad.append(f"paths: interior of {e} passes through anchor {v}")
            if v in seen_interior:
                bad.append(f"paths: interior vertex {v} reused by {e}")
            seen_interior.add(v)
    extra = set(paths) - set(pattern.edges)
    if extra:
        bad.append(f"paths: unknown pattern edges {sorted(extra)}")
    return bad


def find_subdivision(host: Graph, pattern: Graph,
                     budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    """Search for a subdivision of the pattern inside the host.

    Branch vertices are anchored most-constrained first; pattern edges are
    then realised one by one as internally disjoint paths, enumerated
    nearest-target first.  The search is complete, so "absent" is a proof.
    """
    meter = _Meter(budget)
    if not _degree_sequence_fits(host, pattern):
        return OracleResult("subdivision", "absent", None, 0, budget)
    p_order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    edges = sorted(pattern.edges,
                   key=lambda e: -(pattern.degree(e[0]) + pattern.degree(e[1])))
    anchors: dict[int, int] = {}
    paths: dict[tuple[int, int], list[int]] = {}

    def path_search(a: int, b: int, blocked: set[int]) -> Iterable[list[int]]:
        # distance-to-target map steers enumeration and prunes dead branches
        dist: dict[int, int] = {b: 0}
        layer = [b]
        while layer:
            nxt = []
            for v in layer:
                for u in host.adj[v]:
                    if u not in dist and (u not in blocked or u == a):
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            layer = nxt
        if a not in dist:
            return
        path = [a]
        on_path = {a}

        def extend():
            meter.tick()
            cur = path[-1]
            if cur == b:
                yield list(path)
                return
            nbrs = sorted((u for u in host.adj[cur]
                           if u not in on_path
                           and u in dist
                           and (u not in blocked or u == b)),
                          key=lambda u: (dist[u], u))
            for u in nbrs:
                path.append(u)
                on_path.add(u)
                yield from extend()
                path.pop()
                on_path.remove(u)

        yield from extend()

    def realise(i: int, interior: set[int]) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        a, b = anchors[e[0]], anchors[e[1]]
        blocked = (set(anchors.values()) - {a, b}) | interior
        for path in path_search(a, b, blocked):
            mid = set(path[1:-1])
            paths[e] = path
            if realise(i + 1, interior | mid):
                return True
            del paths[e]
        return False

    def assign(i: int) -> bool:
        if i == len(p_order):
            return realise(0, set())
        pv = p_order[i]
        need = pattern.degree(pv)
        taken = set(anchors.values())
        for hv in sorted(range(host.n), key=lambda v: (-host.degree(v), v)):
            if hv in taken or host.degree(hv) < need:
                continue
            meter.tick()
            # anchored pattern neighbours must stay reachable
            anchors[pv] = hv
            if assign(i + 1):
                return True
            del anchors[pv]
        return False

    try:
        if assign(0):
            witness = {"anchors": dict(anchors),
                       "paths": {f"{u},{v}": p for (u, v), p in paths.items()}}
            check = validate_subdivision(host, pattern, anchors, dict(paths))
            if check:
                raise AssertionError(f"oracle produced a bad witness: {check[0]}")
            return OracleResult("subdivision", "found", witness,
                                meter.spent, budget)
        return OracleResult("subdivision", "absent", None, meter.spent, budget)
    except _BudgetExhausted:
        return OracleResult("subdivision", "timeout", None, meter.spent, budget)


# ---------------------------------------------------------------------------
# minors


def validate_minor(host: Graph, pattern: Graph,
                   branch_sets: dict[int, list[int]]) -> list[str]:
    bad: list[str] = []
    if sorted(branch_sets) != list(range(pattern.n)):
        bad.append("branch-sets: must cover every pattern vertex")
        return bad
    used: set[int] = set()
    for pv, bs in branch_sets.items():
        if not bs:
            bad.append(f"branch-sets: set for {pv} is empty")
            continue
        if used & set(bs):
            bad.append(f"branch-sets: set for {pv} overlaps another")
        used.update(bs)
        if not host.induced(sorted(bs)).is_connected():
            bad.append(f"branch-sets: set for {pv} is disconnected")
    for u, v in pattern.edges:
        su, sv = set(branch_sets.get(u, ())), set(branch_sets.get(v, ()))
        if not any(host.has_edge(a, b) for a in su for b in sv):
            bad.append(f"branch-sets: no host edge between sets of {u} and {v}")
    return bad


def _twin_classes(g: Graph) -> list[list[int]]:
    """Group vertices with identical open or closed neighborhoods.

    Swapping two such vertices is an automorphism, so any minor model can be
    relabelled, class by class, to consume each class in index order.  The
    searcher only explores those canonical models; highly symmetric hosts
    (complete bipartite sides, clique blocks) collapse to one candidate per
    class instead of one per vertex.
    """
    def closed_key(v: int) -> tuple:
        return tuple(sorted(set(g.adj[v]) | {v}))

    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        ck = closed_key(v)
        if any(closed_key(u) == ck for u in g.adj[v]):
            key = ("closed", ck)
        else:
            key = ("open", tuple(sorted(g.adj[v])))
        classes.setdefault(key, []).append(v)
    return [sorted(vs) for vs in classes.values()]


def _connected_subsets(host: Graph, free: set[int], max_size: int,
                       meter: _Meter, class_of: list[int],
                       classes: list[list[int]]) -> list[frozenset[int]]:
    """Canonical connected subsets of free vertices up to max_size, smallest
    first.  A vertex may enter only as the lowest unused member of its twin
    class, which skips subsets that are automorphic images of earlier ones."""

    def addable(u: int, s: frozenset[int]) -> bool:
        for w in classes[class_of[u]]:
            if w == u:
                return True
            if w in free and w not in s:
                return False
        return True

    out: list[frozenset[int]] = []
    level = [frozenset([v]) for v in sorted(free) if addable(v, frozenset())]
    seen: set[frozenset[int]] = set(level)
    out.extend(level)
    for _ in range(max_size - 1):
        nxt: list[frozenset[int]] = []
        for s in level:
            for v in s:
                for u in host.adj[v]:
                    meter.tick()
                    if u in free and u not in s and addable(u, s):
                        t = s | {u}
                        if t not in seen:
                            seen.add(t)
                            nxt.append(t)
        out.extend(sorted(nxt, key=sorted))
        level = nxt
    return out


def find_minor(host: Graph, pattern: Graph,
               budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    """Search for the pattern as a minor of the host by assigning connected
    branch sets, most-constrained pattern vertex first, smallest sets first.
    Complete within budget, so "absent" is a proof."""
    meter = _Meter(budget)
    if host.n < pattern.n or host.m() < pattern.m():
        return OracleResult("minor", "absent", None, 0, budget)
    p_order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    assignment: dict[int, list[int]] = {}
    classes = _twin_classes(host)
    class_of = [0] * host.n
    for ci, vs in enumerate(classes):
        for v in vs:
            class_of[v] = ci

    def feasible(pv: int, sset: frozenset[int]) -> bool:
        for u in pattern.adj[pv]:
            if u in assignment:
                su = assignment[u]
                if not any(host.has_edge(a, b) for a in sset for b in su):
                    return False
        return True

    def place(i: int, free: set[int]) -> bool:
        if i == len(p_order):
            return True
        pv = p_order[i]
        remaining = len(p_order) - i
        cap = len(free) - (remaining - 1)
        if cap < 1:
            return False
        for sset in _connected_subsets(host, free, cap, meter,
                                       class_of, classes):
            meter.tick()
            if not feasible(pv, sset):
                continue
            assignment[pv] = sorted(sset)
            if place(i + 1, free - sset):
                return True
            del assignment[pv]
        return False

    try:
        if place(0, set(range(host.n))):
            check = validate_minor(host, pattern, assignment)
            if check:
                raise AssertionError(f"oracle produced a bad witness: {check[0]}")
            witness = {"branch_sets": {str(k): v for k, v in assignment.items()}}
            return OracleResult("minor", "found", witness, meter.spent, budget)
        return OracleResult("minor", "absent", None, meter.spent, budget)
    except _BudgetExhausted:
        return OracleResult("minor", "timeout", None, meter.spent, budget)


# ---------------------------------------------------------------------------
# K4 minors by reduction


def is_k4_minor_free(g: Graph) -> bool:
    """True when the graph is series-parallel, decided by reduction instead
    of search: strip degree <= 1 vertices and smooth degree-2 vertices until
    nothing changes.  The graph vanishes exactly when no K4 minor exists."""
    adj: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
    changed = True
    while changed and adj:
        changed = False
        for v in sorted(adj):
            deg = len(adj[v])
            if deg <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif deg == 2:
                a, b = sorted(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return not adj
