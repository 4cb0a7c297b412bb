"""Rigid intermediate structures used when assembling subdivisions: suns
(even cycles with pendant leaves on one colour class), units (a hub with
internally disjoint spoke paths ending in private stars), webs (a hub of
units), and nakjis (a head set tethered to far-apart legs by disjoint arms).

Each structure has a validator that names every violated clause instead of
returning a bare boolean, and a best-effort builder that only ever returns
instances its validator accepts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph, is_path_in
from .paths import _bfs_set_to_set

Path = list[int]


# ---------------------------------------------------------------------------
# types and validators


@dataclass(frozen=True)
class Sun:
    """Even cycle plus at most one pendant leaf on each odd-index vertex.

    ``cycle`` lists the cycle in order; ``leaves`` holds (leaf, index) pairs
    where index points into ``cycle`` and must be odd, so all attachment
    points sit in one colour class of the cycle.
    """

    cycle: tuple[int, ...]
    leaves: tuple[tuple[int, int], ...] = ()

    @property
    def a(self) -> int:
        return len(self.cycle) // 2

    @property
    def b(self) -> int:
        return len(self.leaves)

    def vertices(self) -> set[int]:
        return set(self.cycle) | {leaf for leaf, _ in self.leaves}

    def to_json(self) -> dict:
        return {"schema": "minorforge/sun-v1", "cycle": list(self.cycle),
                "leaves": [list(p) for p in self.leaves],
                "a": self.a, "b": self.b}


def validate_sun(g: Graph, sun: Sun) -> list[str]:
    bad: list[str] = []
    c = sun.cycle
    if len(c) < 4 or len(c) % 2:
        bad.append("cycle-length: need an even cycle on >= 4 vertices")
    if len(set(c)) != len(c):
        bad.append("cycle-simple: repeated cycle vertex")
    for i in range(len(c)):
        if not g.has_edge(c[i], c[(i + 1) % len(c)]):
            bad.append(f"cycle-edges: {c[i]}–{c[(i + 1) % len(c)]} missing")
    leaf_vs = [leaf for leaf, _ in sun.leaves]
    if len(set(leaf_vs)) != len(leaf_vs) or set(leaf_vs) & set(c):
        bad.append("leaf-distinct: leaves must be distinct and off the cycle")
    seen_pos: set[int] = set()
    for leaf, pos in sun.leaves:
        if not (0 <= pos < len(c)) or pos % 2 == 0:
            bad.append(f"leaf-position: index {pos} not an odd cycle index")
            continue
        if pos in seen_pos:
            bad.append(f"leaf-position: two leaves at index {pos}")
        seen_pos.add(pos)
        if not g.has_edge(leaf, c[pos]):
            bad.append(f"leaf-edge: {leaf}–{c[pos]} missing")
    if sun.a < sun.b:
        bad.append("a-ge-b: more leaves than half the cycle length")
    return bad


@dataclass(frozen=True)
class Unit:
    """Hub with spoke paths to star centres; the stars are its interface.

    ``stars[i]`` is (centre, leaves) and its centre equals the endpoint of
    ``spokes[i]``.  Exterior = all star leaves; everything else is interior.
    """

    core: int
    spokes: tuple[tuple[int, ...], ...]
    stars: tuple[tuple[int, tuple[int, ...]], ...]

    def exterior(self) -> set[int]:
        return {w for _, leaves in self.stars for w in leaves}

    def interior(self) -> set[int]:
        return self.vertices() - self.exterior()

    def vertices(self) -> set[int]:
        vs = {self.core}
        for p in self.spokes:
            vs.update(p)
        for center, leaves in self.stars:
            vs.add(center)
            vs.update(leaves)
        return vs

    def path_to(self, w: int) -> Path:
        """The unique core->w path through the spoke owning exterior vertex w."""
        for (center, leaves), spoke in zip(self.stars, self.spokes):
            if w in leaves:
                return list(spoke) + [w]
        raise ValueError(f"{w} is not an exterior vertex of this unit")

    def to_json(self) -> dict:
        return {"schema": "minorforge/unit-v1", "core": self.core,
                "spokes": [list(p) for p in self.spokes],
                "stars": [[c, list(ls)] for c, ls in self.stars]}


def validate_unit(g: Graph, unit: Unit, h1: int, h2: int, h3: int) -> list[str]:
    bad: list[str] = []
    if len(unit.spokes) != h1 or len(unit.stars) != h1:
        bad.append(f"spoke-count: need {h1} spokes with matching stars")
    ends = []
    for i, p in enumerate(unit.spokes):
        if not is_path_in(g, p) or p[0] != unit.core or len(p) < 2:
            bad.append(f"spoke-path: spoke {i} is not a proper path from the core")
            continue
        if len(p) - 1 > h3:
            bad.append(f"spoke-path: spoke {i} longer than {h3}")
        ends.append(p[-1])
    if len(set(ends)) != len(ends):
        bad.append("spoke-endpoints: endpoints collide")
    for i in range(len(unit.spokes)):
        for j in range(i + 1, len(unit.spokes)):
            if set(unit.spokes[i]) & set(unit.spokes[j]) != {unit.core}:
                bad.append(f"spoke-disjoint: spokes {i},{j} overlap beyond the core")
    spoke_vs = {v for p in unit.spokes for v in p}
    star_sets = []
    for i, (center, leaves) in enumerate(unit.stars):
        if i < len(ends) and center != ends[i]:
            bad.append(f"star-center: star {i} not centred on its spoke endpoint")
        if len(leaves) != h2 or len(set(leaves)) != h2:
            bad.append(f"star-size: star {i} needs exactly {h2} distinct leaves")
        for w in leaves:
            if not g.has_edge(center, w):
                bad.append(f"star-edges: {center}–{w} missing")
        star_sets.append({center, *leaves})
    for i in range(len(star_sets)):
        for j in range(i + 1, len(star_sets)):
            if star_sets[i] & star_sets[j]:
                bad.append(f"star-disjoint: stars {i},{j} share vertices")
    leaf_vs = unit.exterior()
    if leaf_vs & spoke_vs:
        bad.append("star-leaves-clear: star leaves touch spoke paths")
    return bad


@dataclass(frozen=True)
class Web:
    """A hub joined by internally disjoint arm paths to the cores of
    pairwise disjoint units."""

    core: int
    arms: tuple[tuple[int, ...], ...]
    units: tuple[Unit, ...]

    def exterior(self) -> set[int]:
        return {w for u in self.units for w in u.exterior()}

    def center_paths(self) -> set[int]:
        return {v for p in self.arms for v in p}

    def vertices(self) -> set[int]:
        vs = {self.core} | self.center_paths()
        for u in self.units:
            vs |= u.vertices()
        return vs

    def interior(self) -> set[int]:
        return self.vertices() - self.exterior()

    def to_json(self) -> dict:
        return {"schema": "minorforge/web-v1", "core": self.core,
                "arms": [list(p) for p in self.arms],
                "units": [u.to_json() for u in self.units]}


def validate_web(g: Graph, web: Web, h0: int, h1: int, h2: int, h3: int) -> list[str]:
    bad: list[str] = []
    if len(web.arms) != h0 or len(web.units) != h0:
        bad.append(f"arm-count: need {h0} arms with matching units")
    for i, (arm, unit) in enumerate(zip(web.arms, web.units)):
        if not is_path_in(g, arm) or arm[0] != web.core or len(arm) < 2:
            bad.append(f"arm-path: arm {i} is not a proper path from the core")
            continue
        if len(arm) - 1 > h3:
            bad.append(f"arm-path: arm {i} longer than {h3}")
        if arm[-1] != unit.core:
            bad.append(f"arm-path: arm {i} does not end at unit {i}'s core")
    for i in range(len(web.arms)):
        for j in range(i + 1, len(web.arms)):
            if set(web.arms[i]) & set(web.arms[j]) != {web.core}:
                bad.append(f"arm-disjoint: arms {i},{j} overlap beyond the core")
    for i, unit in enumerate(web.units):
        sub = validate_unit(g, unit, h1, h2, h3)
        bad.extend(f"unit[{i}].{msg}" for msg in sub)
        if web.core in unit.vertices():
            bad.append(f"unit-disjoint: unit {i} contains the web core")
    for i in range(len(web.units)):
        for j in range(i + 1, len(web.units)):
            if web.units[i].vertices() & web.units[j].vertices():
                bad.append(f"unit-disjoint: units {i},{j} overlap")
    arm_vs = web.center_paths()
    for i, unit in enumerate(web.units):
        body = unit.vertices() - {unit.core}
        if body & arm_vs:
            bad.append(f"unit-body-clear: unit {i}'s body touches an arm")
    return bad


@dataclass(frozen=True)
class Nakji:
    """Head set tethered by short arms to far-apart low-diameter legs."""

    head: tuple[int, ...]
    legs: tuple[tuple[int, ...], ...]
    arms: tuple[tuple[int, ...], ...]

    def vertices(self) -> set[int]:
        vs = set(self.head)
        for leg in self.legs:
            vs.update(leg)
        for arm in self.arms:
            vs.update(arm)
        return vs

    def to_json(self) -> dict:
        return {"schema": "minorforge/nakji-v1", "head": list(self.head),
                "legs": [list(d) for d in self.legs],
                "arms": [list(p) for p in self.arms]}


def validate_nakji(g: Graph, nakji: Nakji, t: int, s: int, r: int, tau: float) -> list[str]:
    bad: list[str] = []
    if len(nakji.legs) != t or len(nakji.arms) != t:
        bad.append(f"leg-count: need {t} legs with matching arms")
    if not 0 < len(nakji.head) <= s:
        bad.append(f"head-size: head must have 1..{s} vertices")
    head = set(nakji.head)
    leg_sets = [set(d) for d in nakji.legs]
    for i, d in enumerate(leg_sets):
        if not 0 < len(d) <= s:
            bad.append(f"leg-size: leg {i} must have 1..{s} vertices")
    pieces = [head, *leg_sets]
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if pieces[i] & pieces[j]:
                bad.append(f"disjoint: pieces {i},{j} overlap")
    all_legs = set().union(*leg_sets) if leg_sets else set()
    for i, arm in enumerate(nakji.arms):
        if not is_path_in(g, arm) or len(arm) < 2:
            bad.append(f"arm-path: arm {i} is not a proper path")
            continue
        if arm[0] not in head or (i < len(leg_sets) and arm[-1] not in leg_sets[i]):
            bad.append(f"arm-path: arm {i} must run from the head to leg {i}")
        if len(arm) - 1 > 10 * r:
            bad.append(f"arm-path: arm {i} longer than {10 * r}")
        interior = set(arm[1:-1])
        if interior & head:
            bad.append(f"arm-path: arm {i} re-enters the head")
        if interior & all_legs:
            bad.append(f"arm-truncation: arm {i} passes through a leg")
    for i in range(len(nakji.arms)):
        for j in range(i + 1, len(nakji.arms)):
            a, b = nakji.arms[i], nakji.arms[j]
            shared = set(a) & set(b)
            if shared - head:
                bad.append(f"arm-disjoint: arms {i},{j} overlap outside the head")
    for i, d in enumerate(leg_sets):
        members = sorted(d)
        for p in range(len(members)):
            for q in range(p + 1, len(members)):
                if g.distance(members[p], members[q]) > r:
                    bad.append(f"leg-diameter: leg {i} wider than {r}")
                    break
            else:
                continue
            break
    for i in range(len(leg_sets)):
        if g.distance(head, leg_sets[i]) < tau:
            bad.append(f"separation: head and leg {i} closer than {tau}")
        for j in range(i + 1, len(leg_sets)):
            if g.distance(leg_sets[i], leg_sets[j]) < tau:
                bad.append(f"separation: legs {i},{j} closer than {tau}")
    return bad


# ---------------------------------------------------------------------------
# builders


@dataclass
class BuildReport:
    """What a best-effort builder managed to do and why it stopped."""

    reason: str | None = None
    nodes_spent: int = 0
    notes: list[str] = field(default_factory=list)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def spend(self, k: int) -> bool:
        self.spent += k
        return self.spent <= self.limit


def find_disjoint_stars(g: Graph, avoid: Iterable[int], k: int, leaves: int
                        ) -> tuple[list[tuple[int, tuple[int, ...]]], int]:
    """Greedy vertex-disjoint stars with ``leaves`` leaves each.

    Centres are picked by descending residual degree (smallest id on ties),
    leaves by ascending id.  Returns (stars, deficiency) where deficiency is
    how many of the k requested stars could not be carved out.
    """
    avail = set(range(g.n)) - set(avoid)
    stars: list[tuple[int, tuple[int, ...]]] = []
    while len(stars) < k:
        best = None
        for v in sorted(avail):
            deg = sum(1 for w in g.adj[v] if w in avail)
            if deg >= leaves and (best is None or deg > best[0]):
                best = (deg, v)
        if best is None:
            break
        center = best[1]
        picked = tuple(sorted(w for w in g.adj[center] if w in avail)[:leaves])
        stars.append((center, picked))
        avail -= {center, *picked}
    return stars, k - len(stars)


DEFAULT_BUILD_BUDGET = 200_000


def build_unit(g: Graph, avoid: Iterable[int], h1: int, h2: int, h3: int,
               budget: int = DEFAULT_BUILD_BUDGET) -> tuple[Unit | None, BuildReport]:
    """Assemble an (h1, h2, h3)-unit avoiding the given vertices.

    Strategy: for each candidate hub, harvest a pool of disjoint stars with
    slack leaves, connect the hub to star centres by short avoidance paths
    (pairwise internally disjoint by construction), and keep the first hub
    that reaches h1 distinct stars; leaves dirtied by spoke paths are dropped
    before validation.  Hubs are tried in ascending id order, so the
    lexicographically smallest qualifying hub wins.
    """
    avoid_set = set(avoid)
    report = BuildReport()
    budget_ = _Budget(budget)
    hubs = [v for v in range(g.n)
            if v not in avoid_set
            and sum(1 for w in g.adj[v] if w not in avoid_set) >= h1]
    for hub in hubs:
        for slack in (2, 1, 0):
            if not budget_.spend(g.n):
                report.reason = "budget exhausted"
                report.nodes_spent = budget_.spent
                return None, report
            pool, _ = find_disjoint_stars(g, avoid_set | {hub}, k=h1 + 2,
                                          leaves=h2 + slack)
            if len(pool) < h1:
                continue
            by_center = {c: ls for c, ls in pool}
            available = set(by_center)
            spokes: list[Path] = []
            chosen: list[int] = []
            used_leaves: set[int] = set()
            while len(spokes) < h1 and available:
                banned = (avoid_set | used_leaves
                          | {v for p in spokes for v in p if v != hub})
                path = _bfs_set_to_set(g, {hub}, available, banned - available,
                                       depth_cap=h3)
                budget_.spend(g.n)
                if path is None or path[-1] not in available:
                    break
                c = path[-1]
                spokes.append(path)
                chosen.append(c)
                available.discard(c)
                used_leaves.update(by_center[c])
            if len(spokes) < h1:
                continue
            spoke_vs = {v for p in spokes for v in p}
            stars = []
            ok = True
            for c in chosen:
                clean = tuple(w for w in by_center[c]
                              if w not in spoke_vs and w not in avoid_set)[:h2]
                if len(clean) < h2:
                    ok = False
                    break
                stars.append((c, clean))
            if not ok:
                continue
            unit = Unit(core=hub, spokes=tuple(tuple(p) for p in spokes),
                        stars=tuple(stars))
            if not validate_unit(g, unit, h1, h2, h3):
                report.nodes_spent = budget_.spent
                return unit, report
    report.reason = report.reason or "no qualifying hub"
    report.nodes_spent = budget_.spent
    return None, report


def build_web(g: Graph, avoid: Iterable[int], h0: int, h1: int, h2: int, h3: int,
              budget: int = DEFAULT_BUILD_BUDGET) -> tuple[Web | None, BuildReport]:
    """Assemble an (h0, h1, h2, h3)-web: harvest disjoint units around a
    candidate core, then tie the core to each unit core with internally
    disjoint paths of length <= h3.  Cores are tried in ascending id order.
    """
    avoid_set = set(avoid)
    report = BuildReport()
    budget_ = _Budget(budget)
    cores = [v for v in range(g.n)
             if v not in avoid_set
             and sum(1 for w in g.adj[v] if w not in avoid_set) >= h0]
    for core in cores:
        if not budget_.spend(g.n):
            report.reason = "budget exhausted"
            break
        used = avoid_set | {core}
        units: list[Unit] = []
        for _ in range(h0):
            unit, sub = build_unit(g, used, h1, h2, h3,
                                   budget=max(1, budget_.limit - budget_.spent))
            budget_.spend(sub.nodes_spent)
            if unit is None:
                break
            units.append(unit)
            used |= unit.vertices()
        if len(units) < h0:
            report.notes.append(f"core {core}: only {len(units)} units")
            continue
        bodies = set()
        for u in units:
            bodies |= u.vertices() - {u.core}
        arms: list[Path] = []
        arm_vs: set[int] = set()
        for u in units:
            banned = (avoid_set | bodies | (arm_vs - {core})
                      | {w.core for w in units if w is not u})
            path = _bfs_set_to_set(g, {core}, {u.core}, banned - {u.core},
                                   depth_cap=h3)
            budget_.spend(g.n)
            if path is None:
                break
            arms.append(path)
            arm_vs.update(path)
        if len(arms) < h0:
            report.notes.append(f"core {core}: arm routing failed")
            continue
        web = Web(core=core, arms=tuple(tuple(p) for p in arms), units=tuple(units))
        if not validate_web(g, web, h0, h1, h2, h3):
            report.nodes_spent = budget_.spent
            return web, report
        report.notes.append(f"core {core}: assembled web failed validation")
    report.reason = report.reason or "no qualifying core"
    report.nodes_spent = budget_.spent
    return None, report


# ---------------------------------------------------------------------------
# sun finding


@dataclass
class SunSearchResult:
    sun: Sun | None = None
    odd_cycle: list[int] | None = None
    exact: bool = True

    @property
    def found(self) -> bool:
        return self.sun is not None or self.odd_cycle is not None


EXHAUSTIVE_CYCLE_CAP = 16


def _cycles_exact_by_parity(g: Graph, want_odd: bool) -> list[int] | None:
    """Longest exact cycle of the requested parity, or None (n <= 16)."""
    best: list[int] | None = None
    for s in range(g.n):
        states = {1 << v: {v: None} for v in g.adj[s] if v > s}
        all_states: dict[int, dict[int, int | None]] = dict(states)
        frontier = states
        while frontier:
            nxt: dict[int, dict[int, int | None]] = {}
            for mask, ends in frontier.items():
                for v in ends:
                    for w in g.adj[v]:
                        if w <= s or (mask >> w) & 1:
                            continue
                        m2 = mask | (1 << w)
                        slot = all_states.setdefault(m2, {})
                        if w not in slot:
                            slot[w] = v
                            nxt.setdefault(m2, {})[w] = v
            frontier = nxt
        for mask, ends in all_states.items():
            k = bin(mask).count("1") + 1
            if k < 3 or k % 2 != (1 if want_odd else 0):
                continue
            if best is not None and k <= len(best):
                continue
            for v in list(ends):
                if not g.has_edge(v, s):
                    continue
                m = mask
                path = [v]
                while all_states[m].get(path[-1]) is not None:
                    nv = all_states[m][path[-1]]
                    m &= ~(1 << path[-1])
                    path.append(nv)  # type: ignore[arg-type]
                cyc = [s] + path[::-1]
                if len(cyc) == k:
                    best = cyc
                break
    return best


def _long_cycle_heuristic(g: Graph, want_odd: bool | None, tries: int = 64) -> list[int] | None:
    """Randomised DFS long-cycle search for graphs above the exact cap."""
    import random as _random
    rng = _random.Random(0xC1C1E)
    best: list[int] | None = None
    for _ in range(tries):
        start = rng.randrange(g.n)
        path = [start]
        on_path = {start}
        while True:
            options = [w for w in g.adj[path[-1]] if w not in on_path]
            if not options:
                break
            w = rng.choice(options)
            path.append(w)
            on_path.add(w)
        # longest suffix cycle closing back into the path
        for i, v in enumerate(path):
            if g.has_edge(v, path[-1]):
                cyc = path[i:]
                if len(cyc) >= 3 and (want_odd is None or len(cyc) % 2 == (1 if want_odd else 0)):
                    if best is None or len(cyc) > len(best):
                        best = cyc
                break
    return best


def find_sun(g: Graph, r0: int) -> SunSearchResult:
    """Find a sun with a + b >= r0, or a long odd cycle when g is odd.

    Non-bipartite graphs yield an odd cycle of length >= r0 when one exists
    (that case needs no sun downstream).  Bipartite graphs: take the longest
    cycle through the smaller side, then greedily attach leaves from the
    larger side to unused odd-index cycle vertices until a + b reaches r0.
    Exact cycle search caps at 16 vertices; beyond that a randomised DFS
    heuristic is used and the result is flagged inexact.
    """
    exact = g.n <= EXHAUSTIVE_CYCLE_CAP
    sides = g.bipartition()
    if sides is None:
        cyc = (_cycles_exact_by_parity(g, want_odd=True) if exact
               else _long_cycle_heuristic(g, want_odd=True))
        if cyc is not None and len(cyc) >= r0:
            return SunSearchResult(odd_cycle=cyc, exact=exact)
        return SunSearchResult(exact=exact)
    a_side, b_side = sides
    if len(a_side) > len(b_side):
        a_side, b_side = b_side, a_side
    cyc = (_cycles_exact_by_parity(g, want_odd=False) if exact
           else _long_cycle_heuristic(g, want_odd=False))
    if cyc is None:
        return SunSearchResult(exact=exact)
    # rotate so index 0 lies in the large side: attachment points (odd
    # indices) then sit in the small side's colour class
    if cyc[0] in a_side:
        cyc = cyc[1:] + cyc[:1]
    a = len(cyc) // 2
    leaves: list[tuple[int, int]] = []
    if a < r0:
        free = {i for i in range(1, len(cyc), 2)}
        for w in sorted(b_side - set(cyc)):
            if a + len(leaves) >= r0:
                break
            spot = next((i for i in sorted(free) if g.has_edge(w, cyc[i])), None)
            if spot is not None:
                leaves.append((w, spot))
                free.discard(spot)
    if a + len(leaves) < r0:
        return SunSearchResult(exact=exact)
    sun = Sun(cycle=tuple(cyc), leaves=tuple(leaves))
    return SunSearchResult(sun=sun, exact=exact)


# ---------------------------------------------------------------------------
# nakji assembly


def build_nakjis(g: Graph, avoid: Iterable[int], t: int, s: int, r: int,
                 tau: float, count: int,
                 subexpanders: Sequence[Iterable[int]]) -> tuple[list[Nakji], BuildReport]:
    """Assemble up to ``count`` vertex-disjoint nakjis from far-apart
    subexpander pieces (callers guarantee pairwise distance >= 2*tau).

    Each round picks the most central remaining piece as the head (minimum
    worst-case distance to the others), trims head and legs to balls of
    radius r/2 capped at s vertices, and routes arms by avoidance BFS,
    stopping at first leg contact.  Only validated nakjis are returned.
    """
    avoid_set = set(avoid)
    report = BuildReport()
    pool: list[list[int]] = []
    for se in subexpanders:
        vs = [v for v in se if v not in avoid_set]
        if vs:
            pool.append(sorted(vs))

    def trim(vs: list[int]) -> list[int]:
        center = vs[0]
        sub = set(vs)
        order = [center]
        seen = {center}
        frontier = [center]
        for _ in range(max(0, r // 2)):
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if w in sub and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            nxt.sort()
            order.extend(nxt)
            frontier = nxt
        return order[:s]

    out: list[Nakji] = []
    used: set[int] = set()
    while len(pool) >= t + 1 and len(out) < count:
        # head = piece minimising its farthest distance to the others
        def outlying(i: int) -> tuple[float, int]:
            worst = max(g.distance(pool[i], pool[j])
                        for j in range(len(pool)) if j != i)
            return worst, i

        head_i = min(range(len(pool)), key=outlying)
        head_piece = pool.pop(head_i)
        rest = sorted(range(len(pool)), key=lambda j: (g.distance(head_piece, pool[j]), j))
        leg_pieces = [pool[j] for j in rest[:t]]
        head = trim(head_piece)
        legs = [trim(p) for p in leg_pieces]
        arms: list[Path] = []
        arm_vs: set[int] = set()
        all_legs = {v for leg in legs for v in leg}
        for i, leg in enumerate(legs):
            banned = (avoid_set | used | (all_legs - set(leg))
                      | (arm_vs - set(head)))
            path = _bfs_set_to_set(g, set(head), set(leg),
                                   banned - set(leg), depth_cap=10 * r)
            if path is None:
                break
            arms.append(path)
            arm_vs.update(path)
        if len(arms) < t:
            # burn the head candidate, legs stay in the pool
            report.notes.append("arm routing failed for a head candidate")
            continue
        nakji = Nakji(head=tuple(head), legs=tuple(tuple(d) for d in legs),
                      arms=tuple(tuple(p) for p in arms))
        bad = validate_nakji(g, nakji, t, s, r, tau)
        if bad:
            report.notes.extend(f"candidate rejected: {msg}" for msg in bad)
            continue
        out.append(nakji)
        used |= nakji.vertices()
        for p in leg_pieces:
            pool.remove(p)
    if len(out) < count:
        report.reason = f"material for {len(out)} of {count} requested"
    return out, report
