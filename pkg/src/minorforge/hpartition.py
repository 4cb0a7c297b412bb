"""Vertex partitions of a bipartite pattern graph onto odd cycles and suns.

The method: order the pattern by a small-bandwidth ordering, chop the order
into blocks at least as wide as the bandwidth (so edges only join
consecutive blocks), bundle blocks into segments of t = ceil(beta^-1/2)
blocks, assign each segment a random target class, and walk the blocks
around the target structure.  A block in state (p, o) sends its two colour
classes to a pair of adjacent target classes; between consecutive blocks
the state may stay put, advance, or retreat by one, and each such step
moves only one of the two sides, which keeps every cross-block edge on a
target edge.  Because the cycle length r is odd, a walk can reach any
class pair in under r steps regardless of parity (suns alternate the same
way and their leaves add shortcut moves).

Class caps are met by a backtracking search over the walk space, biased
toward the randomised segment targets and retried with fresh targets when
a node budget runs out.  A failure reports how far the best try was from
fitting, and when the search space was exhausted the failure is a proof
that no walk of legal steps fits the caps.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graphs import Graph
from .structures import Sun


class PartitionError(RuntimeError):
    """No valid plan within the retry budget, or broken preconditions.

    ``near_miss`` carries the smallest total class-size overflow seen across
    attempts, when capacity was what failed."""

    def __init__(self, message: str, near_miss: int | None = None):
        super().__init__(message)
        self.near_miss = near_miss


# ---------------------------------------------------------------------------
# bandwidth


@dataclass
class BandwidthResult:
    order: list[int]
    b: int
    exact: bool

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def to_json(self) -> dict:
        return {"schema": "minorforge/bandwidth-v1", "order": self.order,
                "b": self.b, "exact": self.exact}


def order_bandwidth(g: Graph, order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)


def _cuthill_mckee(g: Graph) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for comp in g.components():
        start = min(comp, key=lambda v: (g.degree(v), v))
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            nxt = sorted((w for w in g.adj[v] if w not in seen),
                         key=lambda w: (g.degree(w), w))
            seen.update(nxt)
            queue.extend(nxt)
    return order[::-1]


EXACT_BANDWIDTH_CAP = 12


def bandwidth_order(g: Graph, exact_cap: int = EXACT_BANDWIDTH_CAP) -> BandwidthResult:
    """An ordering of g with small bandwidth.

    Exact (branch and bound over placements, widths tried from a degree
    lower bound upward) up to ``exact_cap`` vertices, reverse Cuthill-McKee
    above.  The returned b is the true bandwidth of the returned order, so
    it is a valid witness either way.
    """
    if g.n == 0:
        return BandwidthResult([], 0, True)
    if g.m() == 0:
        return BandwidthResult(list(range(g.n)), 0, True)
    if g.n > exact_cap:
        order = _cuthill_mckee(g)
        return BandwidthResult(order, order_bandwidth(g, order), False)

    lower = max(1, max((g.degree(v) + 1) // 2 for v in range(g.n)))

    def feasible(b: int) -> list[int] | None:
        placed: list[int] = []
        pos: dict[int, int] = {}

        def rec() -> bool:
            p = len(placed)
            if p == g.n:
                return True
            for v in range(g.n):
                if v in pos:
                    continue
                if any(u in pos and p - pos[u] > b for u in g.adj[v]):
                    continue
                placed.append(v)
                pos[v] = p
                # any placed vertex still missing a neighbour must be able
                # to reach position p+1
                if all(p + 1 - pos[u] <= b
                       for u in placed
                       if any(x not in pos for x in g.adj[u])):
                    if rec():
                        return True
                placed.pop()
                del pos[v]
            return False

        return placed if rec() else None

    for b in range(lower, g.n):
        order = feasible(b)
        if order is not None:
            return BandwidthResult(order, b, True)
    return BandwidthResult(list(range(g.n)), g.n - 1, True)


# ---------------------------------------------------------------------------
# block machinery shared by both partition targets


@dataclass
class _Layout:
    blocks: list[list[int]]
    width: int
    group_size: int
    groups: list[range]          # block index ranges
    targets_per: int             # groups needing a random target each attempt
    a_side: set[int]
    w_mass: int                  # vertices in the first r blocks of each group


def _layout(h: Graph, bw: BandwidthResult, d: float, r: int,
            beta: float | None) -> _Layout:
    sides = h.bipartition()
    if sides is None:
        raise PartitionError("pattern graph must be bipartite")
    a, b = sides
    if len(a) < len(b):
        a, b = b, a
    width = max(bw.b, 1)
    if beta is None:
        beta = width / d
    if not 0 < beta:
        raise PartitionError("beta must be positive")
    blocks = [list(bw.order[i:i + width]) for i in range(0, len(bw.order), width)]
    group_size = max(1, math.ceil(beta ** -0.5))
    groups = [range(i, min(i + group_size, len(blocks)))
              for i in range(0, len(blocks), group_size)]
    w_mass = sum(len(blocks[j]) for grp in groups for j in list(grp)[:r])
    bound = r * math.sqrt(beta) * d
    if w_mass > bound + 1e-9:
        raise PartitionError(
            f"walk-segment mass {w_mass} exceeds its bound {bound:.3f}; "
            "the pattern is too large for this degree budget")
    return _Layout(blocks=blocks, width=width, group_size=group_size,
                   groups=groups, targets_per=len(groups), a_side=a,
                   w_mass=w_mass)


def _cap_of(d: float, r: int) -> int:
    return math.floor(d / r + 1e-9)


# ---------------------------------------------------------------------------
# odd cycle target


@dataclass
class CyclePartitionPlan:
    classes: list[list[int]]
    r: int
    d: float
    cap: int
    seed_used: int
    attempts: int
    block_width: int
    group_size: int
    w_mass: int
    w_mass_bound: float
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"schema": "minorforge/cycle-partition-v1",
                "classes": self.classes, "r": self.r, "d": self.d,
                "cap": self.cap, "seed_used": self.seed_used,
                "attempts": self.attempts, "block_width": self.block_width,
                "group_size": self.group_size, "w_mass": self.w_mass,
                "w_mass_bound": self.w_mass_bound, "notes": self.notes}


def validate_cycle_partition(h: Graph, classes: Sequence[Sequence[int]],
                             r: int, d: float) -> list[str]:
    bad: list[str] = []
    if len(classes) != r:
        bad.append(f"class-count: {len(classes)} != {r}")
        return bad
    cap = _cap_of(d, r)
    owner: dict[int, int] = {}
    for i, cls in enumerate(classes):
        if len(cls) > cap:
            bad.append(f"cap: class {i} holds {len(cls)} > {cap}")
        for v in cls:
            if v in owner:
                bad.append(f"partition: vertex {v} in classes {owner[v]} and {i}")
            owner[v] = i
    missing = set(range(h.n)) - set(owner)
    if missing:
        bad.append(f"partition: vertices {sorted(missing)} unassigned")
        return bad
    for u, v in h.edges:
        gap = abs(owner[u] - owner[v])
        if gap != 1 and gap != r - 1:
            bad.append(f"edge-locality: edge {u}-{v} joins classes "
                       f"{owner[u]},{owner[v]}")
    return bad


WALK_SEARCH_BUDGET = 200_000


class _WalkBudget(Exception):
    pass


def _walk_dfs(flat: Sequence[tuple[int, int, int]], cap: int, fill,
              pair_of, children, budget: int = WALK_SEARCH_BUDGET):
    """Backtracking search for a walk placing every block within the caps.

    ``flat`` holds (a-count, b-count, group) per block; ``children`` yields
    candidate states for a block given the previous state (None at the
    start) in preference order.  Returns (walk, near_miss, exhausted):
    ``walk`` is None on failure, ``near_miss`` the smallest forced overflow
    seen, and ``exhausted`` tells whether the whole walk space was covered
    (budget not hit), which makes the failure a proof of walk infeasibility.
    """
    n_blocks = len(flat)
    walk: list = []
    near: list[int | None] = [None]
    nodes = [0]

    def rec(bi: int, state) -> bool:
        if bi == n_blocks:
            return True
        if nodes[0] >= budget:
            raise _WalkBudget
        na, nb, _ = flat[bi]
        feasible = []
        worst: int | None = None
        for st in children(state, bi):
            ka, kb = pair_of(st)
            over = (max(0, fill[ka] + na - cap)
                    + max(0, fill[kb] + nb - cap))
            if over == 0:
                feasible.append(st)
            elif worst is None or over < worst:
                worst = over
        if not feasible and worst is not None:
            near[0] = worst if near[0] is None else min(near[0], worst)
        for st in feasible:
            nodes[0] += 1
            ka, kb = pair_of(st)
            fill[ka] += na
            fill[kb] += nb
            walk.append(st)
            if rec(bi + 1, st):
                return True
            walk.pop()
            fill[ka] -= na
            fill[kb] -= nb
        return False

    try:
        found = rec(0, None)
    except _WalkBudget:
        return None, near[0], False
    return (walk if found else None), near[0], not found


def partition_onto_odd_cycle(h: Graph, r: int, d: float,
                             bw: BandwidthResult | None = None,
                             seed: int = 0, retries: int = 64,
                             beta: float | None = None) -> CyclePartitionPlan:
    """Partition V(h) into classes X_0..X_{r-1} with every class at most
    floor(d/r) vertices and every edge of h between cyclically adjacent
    classes.

    Raises PartitionError if h is not bipartite, r is not an odd number at
    least 3, or no attempt within ``retries`` satisfies the validator; the
    error then carries the best near-miss overflow.
    """
    if r < 3 or r % 2 == 0:
        raise PartitionError("target cycle length must be odd and >= 3")
    cap = _cap_of(d, r)
    if h.n == 0:
        return CyclePartitionPlan([[] for _ in range(r)], r, d, cap, seed, 0,
                                  1, 1, 0, 0.0)
    if bw is None:
        bw = bandwidth_order(h)
    lay = _layout(h, bw, d, r, beta)
    beta_eff = beta if beta is not None else lay.width / d
    w_bound = r * math.sqrt(beta_eff) * d
    if lay.width > cap:
        raise PartitionError(
            f"block width {lay.width} exceeds class capacity {cap}; "
            "the degree budget is too small for this bandwidth")

    # state (p, o): the block's A part goes to class p (o=0) or p+1 (o=1),
    # the B part to the other of the pair.  Legal successors: stay, advance
    # to (p+1, 1-o), or retreat to (p-1, 1-o); each single step moves only
    # one of the two sides, which is what keeps cross-block edges local.
    def class_pair(state: tuple[int, int]) -> tuple[int, int]:
        p, o = state
        return (p, (p + 1) % r) if o == 0 else ((p + 1) % r, p)

    def moves(state: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        p, o = state
        return state, ((p + 1) % r, 1 - o), ((p - 1) % r, 1 - o)

    flat: list[tuple[int, int, int]] = []  # (na, nb, group index) per block
    for gi, grp in enumerate(lay.groups):
        for j in grp:
            block = lay.blocks[j]
            na = sum(1 for v in block if v in lay.a_side)
            flat.append((na, len(block) - na, gi))
    order_blocks = [lay.blocks[j] for grp in lay.groups for j in grp]

    best_overflow: int | None = None
    for attempt in range(retries):
        rng = random.Random(seed + attempt)
        targets = [rng.randrange(r) for _ in lay.groups]
        fill = [0] * r

        def children(state: tuple[int, int] | None, bi: int):
            na, nb, gi = flat[bi]
            target = targets[gi]

            def slack(st: tuple[int, int]) -> int:
                ca, cb = class_pair(st)
                return min(cap - fill[ca] - na, cap - fill[cb] - nb)

            if state is None:
                first = [(target, 0), (target, 1)]
                rest = sorted(((p, o) for p in range(r) for o in (0, 1)
                               if (p, o) not in first),
                              key=slack, reverse=True)
                return first + rest
            stay, advance, retreat = moves(state)
            c = (target - state[0]) % r
            # head for the class pair {target, target+1} by the shorter
            # arc; any arrival orientation is fine
            if c == 0:
                planned = stay
            elif c <= r - c:
                planned = advance
            else:
                planned = retreat
            rest = sorted((st for st in moves(state) if st != planned),
                          key=slack, reverse=True)
            return [planned] + rest

        walk, near, exhausted = _walk_dfs(flat, cap, fill, class_pair, children)
        if walk is not None:
            placement: list[list[int]] = [[] for _ in range(r)]
            for bi, st in enumerate(walk):
                ca, cb = class_pair(st)
                for v in order_blocks[bi]:
                    placement[ca if v in lay.a_side else cb].append(v)
            bad = validate_cycle_partition(h, placement, r, d)
            if not bad:
                return CyclePartitionPlan(
                    classes=[sorted(c) for c in placement], r=r, d=d,
                    cap=cap, seed_used=seed + attempt, attempts=attempt + 1,
                    block_width=lay.width, group_size=lay.group_size,
                    w_mass=lay.w_mass, w_mass_bound=w_bound)
            raise AssertionError(f"walk produced an invalid plan: {bad}")
        if near is not None:
            best_overflow = near if best_overflow is None else min(best_overflow, near)
        if exhausted:
            # the whole walk space was searched, retrying cannot help
            raise PartitionError(
                "no block walk fits the class caps (search exhausted); "
                f"best near-miss overflowed by {best_overflow}",
                near_miss=best_overflow)
    raise PartitionError(
        f"no valid plan in {retries} attempts; best near-miss overflowed "
        f"by {best_overflow}", near_miss=best_overflow)


# ---------------------------------------------------------------------------
# sun target


@dataclass
class SunPartitionPlan:
    cycle_classes: list[list[int]]
    leaf_classes: list[list[int]]
    r: int
    d: float
    cap: int
    seed_used: int
    attempts: int
    w_mass: int
    w_mass_bound: float
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"schema": "minorforge/sun-partition-v1",
                "cycle_classes": self.cycle_classes,
                "leaf_classes": self.leaf_classes, "r": self.r, "d": self.d,
                "cap": self.cap, "seed_used": self.seed_used,
                "attempts": self.attempts, "w_mass": self.w_mass,
                "w_mass_bound": self.w_mass_bound, "notes": self.notes}


def validate_sun_partition(h: Graph, sun: Sun,
                           cycle_classes: Sequence[Sequence[int]],
                           leaf_classes: Sequence[Sequence[int]],
                           r: int, d: float) -> list[str]:
    """The classes must partition V(h), respect the floor(d/r) cap, and map
    every edge of h onto an edge of the sun (cycle edge or attachment)."""
    bad: list[str] = []
    nc = len(sun.cycle)
    if len(cycle_classes) != nc or len(leaf_classes) != len(sun.leaves):
        bad.append("class-count: classes do not match the sun's shape")
        return bad
    cap = _cap_of(d, r)
    owner: dict[int, tuple[str, int]] = {}
    for kind, group in (("cycle", cycle_classes), ("leaf", leaf_classes)):
        for i, cls in enumerate(group):
            if len(cls) > cap:
                bad.append(f"cap: {kind} class {i} holds {len(cls)} > {cap}")
            for v in cls:
                if v in owner:
                    bad.append(f"partition: vertex {v} assigned twice")
                owner[v] = (kind, i)
    missing = set(range(h.n)) - set(owner)
    if missing:
        bad.append(f"partition: vertices {sorted(missing)} unassigned")
        return bad
    attach = {i: pos for i, (_, pos) in enumerate(sun.leaves)}
    for u, v in h.edges:
        ku, iu = owner[u]
        kv, iv = owner[v]
        if ku == "cycle" and kv == "cycle":
            gap = abs(iu - iv)
            if gap != 1 and gap != nc - 1:
                bad.append(f"edge-locality: {u}-{v} joins cycle classes {iu},{iv}")
        elif ku == "leaf" and kv == "cycle":
            if attach[iu] != iv:
                bad.append(f"edge-locality: {u}-{v} leaf {iu} vs cycle {iv}")
        elif kv == "leaf" and ku == "cycle":
            if attach[iv] != iu:
                bad.append(f"edge-locality: {u}-{v} leaf {iv} vs cycle {iu}")
        else:
            bad.append(f"edge-locality: {u}-{v} joins two leaf classes")
    return bad


def partition_onto_sun(h: Graph, sun: Sun, r: int, d: float,
                       bw: BandwidthResult | None = None,
                       seed: int = 0, retries: int = 64,
                       beta: float | None = None) -> SunPartitionPlan:
    """Partition V(h) onto the classes of a sun (one per cycle vertex, one
    per leaf) with the floor(d/r) cap and exact edge locality.

    Preconditions: h bipartite, sun.a >= sun.b and sun.a + sun.b >= r.  The
    larger side of h rides the even cycle positions and the leaf classes;
    the smaller side rides the odd (attachment) positions.
    """
    if sun.a < 2 or sun.a < sun.b or sun.a + sun.b < r:
        raise PartitionError("sun shape too small: need a >= max(2, b) and "
                             "a + b >= r")
    cap = _cap_of(d, r)
    if h.n == 0:
        return SunPartitionPlan([[] for _ in sun.cycle],
                                [[] for _ in sun.leaves], r, d, cap, seed, 0,
                                0, 0.0)
    if bw is None:
        bw = bandwidth_order(h)
    lay = _layout(h, bw, d, r, beta)
    beta_eff = beta if beta is not None else lay.width / d
    w_bound = r * math.sqrt(beta_eff) * d
    if lay.width > cap:
        raise PartitionError(
            f"block width {lay.width} exceeds class capacity {cap}")
    nc = len(sun.cycle)
    a = sun.a

    # states: ("u", P) = A at 2P, B at 2P+1; ("v", P) = A at 2P+2, B at
    # 2P+1; ("w", j) = A at leaf class j, B at its attachment.  Each
    # successor moves only one side by one sun edge, so crossing edges stay
    # on sun edges; the relation is symmetric (every move can be undone).
    leaf_at: dict[int, list[int]] = {}
    for j, (_, pos) in enumerate(sun.leaves):
        leaf_at.setdefault(pos, []).append(j)

    def successors(state: tuple[str, int]) -> list[tuple[str, int]]:
        kind, i = state
        if kind == "u":
            out = [("v", i), ("v", (i - 1) % a)]
            out += [("w", j) for j in leaf_at.get((2 * i + 1) % nc, [])]
            return out
        if kind == "v":
            out = [("u", (i + 1) % a), ("u", i)]
            out += [("w", j) for j in leaf_at.get((2 * i + 1) % nc, [])]
            return out
        pos = sun.leaves[i][1]
        p = ((pos - 1) // 2) % a
        return ([("u", p), ("v", p)]
                + [("w", j) for j in leaf_at[pos] if j != i])

    def classes_of(state: tuple[str, int]) -> tuple[tuple[str, int], tuple[str, int]]:
        kind, i = state
        if kind == "u":
            return ("cycle", 2 * i), ("cycle", (2 * i + 1) % nc)
        if kind == "v":
            return ("cycle", (2 * i + 2) % nc), ("cycle", (2 * i + 1) % nc)
        return ("leaf", i), ("cycle", sun.leaves[i][1])

    all_states = ([("u", p) for p in range(a)] + [("v", p) for p in range(a)]
                  + [("w", j) for j in range(sun.b)])
    hop: dict[tuple[str, int], dict[tuple[str, int], tuple[str, int]]] = {}
    for src in all_states:
        # first step of a shortest walk from src to each reachable state
        first: dict[tuple[str, int], tuple[str, int]] = {src: src}
        frontier = [src]
        while frontier:
            nxt = []
            for s in frontier:
                for t2 in successors(s):
                    if t2 not in first:
                        first[t2] = t2 if s == src else first[s]
                        nxt.append(t2)
            frontier = nxt
        hop[src] = first

    body_targets = [("u", p) for p in range(a)] + [("w", j) for j in range(sun.b)]

    flat: list[tuple[int, int, int]] = []  # (na, nb, group index) per block
    for gi, grp in enumerate(lay.groups):
        for j in grp:
            block = lay.blocks[j]
            na = sum(1 for v in block if v in lay.a_side)
            flat.append((na, len(block) - na, gi))
    order_blocks = [lay.blocks[j] for grp in lay.groups for j in grp]

    best_overflow: int | None = None
    for attempt in range(retries):
        rng = random.Random((seed + attempt) * 0x9E3779B1 + 1)
        targets = [body_targets[rng.randrange(len(body_targets))]
                   for _ in lay.groups]
        fill: dict[tuple[str, int], int] = {("cycle", i): 0 for i in range(nc)}
        fill.update({("leaf", j): 0 for j in range(sun.b)})

        def children(state: tuple[str, int] | None, bi: int):
            na, nb, gi = flat[bi]
            target = targets[gi]

            def slack(st: tuple[str, int]) -> int:
                ka, kb = classes_of(st)
                return min(cap - fill[ka] - na, cap - fill[kb] - nb)

            if state is None:
                rest = sorted((st for st in all_states if st != target),
                              key=slack, reverse=True)
                return [target] + rest
            if state == target or target not in hop[state]:
                planned = state
            else:
                planned = hop[state][target]
            rest = sorted((st for st in (state, *successors(state))
                           if st != planned),
                          key=slack, reverse=True)
            return [planned, *rest]

        walk, near, exhausted = _walk_dfs(flat, cap, fill, classes_of, children)
        if walk is not None:
            placement: dict[tuple[str, int], list[int]] = {
                ("cycle", i): [] for i in range(nc)}
            placement.update({("leaf", j): [] for j in range(sun.b)})
            for bi, st in enumerate(walk):
                ka, kb = classes_of(st)
                for v in order_blocks[bi]:
                    placement[ka if v in lay.a_side else kb].append(v)
            cyc = [placement[("cycle", i)] for i in range(nc)]
            leaf = [placement[("leaf", j)] for j in range(sun.b)]
            bad = validate_sun_partition(h, sun, cyc, leaf, r, d)
            if not bad:
                return SunPartitionPlan(
                    cycle_classes=[sorted(c) for c in cyc],
                    leaf_classes=[sorted(c) for c in leaf], r=r, d=d,
                    cap=cap, seed_used=seed + attempt, attempts=attempt + 1,
                    w_mass=lay.w_mass, w_mass_bound=w_bound)
            raise AssertionError(f"walk produced an invalid plan: {bad}")
        if near is not None:
            best_overflow = near if best_overflow is None else min(best_overflow, near)
        if exhausted:
            # the whole walk space was searched, retrying cannot help
            raise PartitionError(
                "no block walk fits the class caps (search exhausted); "
                f"best near-miss overflowed by {best_overflow}",
                near_miss=best_overflow)
    raise PartitionError(
        f"no valid plan in {retries} attempts; best near-miss overflowed "
        f"by {best_overflow}", near_miss=best_overflow)


# ---------------------------------------------------------------------------
# separability


@dataclass
class SeparatorResult:
    separator: list[int] | None
    alpha: float
    exact: bool

    @property
    def found(self) -> bool:
        return self.separator is not None

    def to_json(self) -> dict:
        return {"schema": "minorforge/separator-v1",
                "separator": self.separator, "alpha": self.alpha,
                "exact": self.exact}


EXACT_SEPARATOR_CAP = 14


def check_separable(h: Graph, alpha: float,
                    exact_cap: int = EXACT_SEPARATOR_CAP) -> SeparatorResult:
    """Find S with |S| <= alpha*|h| whose removal leaves components of size
    at most alpha*|h|.

    Exhaustive (smallest, then lexicographically first, separator) up to
    ``exact_cap`` vertices, so an empty result there proves absence.  Above
    the cap a sweep over a Cuthill-McKee order is tried and an empty result
    proves nothing.
    """
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    n = h.n
    limit = math.floor(alpha * n + 1e-9)

    def works(sep: set[int]) -> bool:
        rest = h.without_vertices(sep)
        return all(len(c) <= alpha * n + 1e-9 for c in rest.components())

    if n <= exact_cap:
        for k in range(0, limit + 1):
            for sep in combinations(range(n), k):
                if works(set(sep)):
                    return SeparatorResult(list(sep), alpha, True)
        return SeparatorResult(None, alpha, True)

    order = _cuthill_mckee(h)
    pos = {v: i for i, v in enumerate(order)}
    best: list[int] | None = None
    for cut in range(1, n):
        # cut the order and take the prefix endpoints of crossing edges
        sep = {u if pos[u] < cut else v
               for u, v in h.edges
               if (pos[u] < cut) != (pos[v] < cut)}
        if len(sep) <= limit and works(sep):
            if best is None or len(sep) < len(best):
                best = sorted(sep)
    return SeparatorResult(best, alpha, False)
