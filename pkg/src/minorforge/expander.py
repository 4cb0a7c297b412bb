"""Robust expansion: the decaying expansion weight, its integral companion,
the density potential used to pick well-expanding subgraphs, and the
verifier/extractor built on top of them.

All logarithms here are natural.  The weight ``rho`` vanishes below a fifth
of the threshold ``t`` and decays like 1/log^2 above it; it is decreasing
while x*rho(x) is increasing, which several callers rely on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph, GraphError

DEFAULT_C = 31.0
DEFAULT_EXHAUSTIVE_CAP = 18
DEFAULT_SAMPLE_TRIALS = 200


class ParameterError(ValueError):
    """Raised when expansion parameters are out of their legal ranges."""


@dataclass(frozen=True)
class ExpanderParams:
    """Parameters (eps1, t) of a robust-expansion statement.

    ``C`` scales the integral weight; ``eps2`` is only needed when the
    threshold was instantiated as eps2 * average-degree and the derived
    connectivity fraction ``nu`` is wanted.
    """

    eps1: float
    t: float
    C: float = DEFAULT_C
    eps2: float | None = None

    def __post_init__(self):
        if self.eps1 <= 0:
            raise ParameterError("eps1 must be positive")
        if self.t <= 0:
            raise ParameterError("threshold t must be positive")
        if self.C <= 0:
            raise ParameterError("C must be positive")
        if self.eps2 is not None and not 0 < self.eps2 < 0.5:
            raise ParameterError("eps2 must lie in (0, 1/2)")

    @property
    def delta(self) -> float:
        """gamma's constant value on [1, t/5]; must stay below 1."""
        return self.C * self.eps1 / math.log(3.0)

    @property
    def nu(self) -> float:
        if self.eps2 is None:
            raise ParameterError("nu needs eps2")
        return self.eps1 / (6.0 * math.log(5.0 / self.eps2) ** 2)

    def meets_extraction_bounds(self) -> bool:
        """Whether the constants are in the regime the extraction guarantees
        assume (C > 30, eps1 <= 1/(10C), delta < 1).  The verifier accepts
        arbitrary positive parameters; only extraction insists on these."""
        return self.C > 30 and self.eps1 <= 1.0 / (10.0 * self.C) and self.delta < 1


def rho(x: float, params: ExpanderParams) -> float:
    """Expansion weight: 0 below t/5, else eps1 / log^2(15x/t)."""
    if x < params.t / 5.0:
        return 0.0
    return params.eps1 / math.log(15.0 * x / params.t) ** 2

def gamma(x: float, params: ExpanderParams) -> float:
    """C times the tail integral of rho(u)/u from x onward.

    Closed form: for x >= t/5 the integral is eps1/log(15x/t); below that
    rho vanishes, so gamma is frozen at its t/5 value C*eps1/log 3.
    """
    if x <= 0:
        raise ParameterError("gamma is defined for positive x")
    if x < params.t / 5.0:
        return params.delta
    return params.C * params.eps1 / math.log(15.0 * x / params.t)


def phi_score(g: Graph, params: ExpanderParams) -> float:
    """Density potential d(G) * (1 + gamma(|G|)) used to rank subgraphs."""
    if g.n == 0:
        raise GraphError("potential of the empty graph is undefined")
    return float(g.average_degree()) * (1.0 + gamma(g.n, params))


def adversarial_boundary_deletion(g: Graph, xs: Iterable[int], budget: int
                                  ) -> tuple[set[int], list[tuple[int, int]]]:
    """Minimise the surviving neighbourhood |N(X)| over all deletions of at
    most ``budget`` edges, and return (survivors, deleted edges).

    A boundary vertex only leaves N(X) when every edge it sends into X is
    cut, so the optimal adversary disconnects boundary vertices in order of
    ascending edge count into X.  Edges elsewhere never help.
    """
    if budget < 0:
        raise ParameterError("budget must be nonnegative")
    xset = set(xs)
    cost: dict[int, list[tuple[int, int]]] = {}
    for x in xset:
        for w in g.adj[x]:
            if w not in xset:
                cost.setdefault(w, []).append((min(x, w), max(x, w)))
    survivors = set(cost)
    deleted: list[tuple[int, int]] = []
    for v in sorted(cost, key=lambda v: (len(cost[v]), v)):
        if len(cost[v]) > budget:
            break
        budget -= len(cost[v])
        deleted.extend(sorted(cost[v]))
        survivors.discard(v)
    return survivors, deleted


@dataclass
class ExpansionCertificate:
    """Outcome of a robust-expansion check."""

    params: ExpanderParams
    n: int
    mode: str                       # "exhaustive" | "sampled" | "vacuous"
    holds: bool
    sets_checked: int
    # worst passing margin: (X, survivors, required)
    worst: tuple[tuple[int, ...], int, float] | None = None
    # first violation found: (X, deleted edges, survivors, required)
    counterexample: tuple[tuple[int, ...], tuple[tuple[int, int], ...], int, float] | None = None

    def to_json(self) -> dict:
        return {
            "schema": "minorforge/expansion-cert-v1",
            "params": {"eps1": self.params.eps1, "t": self.params.t,
                       "C": self.params.C, "eps2": self.params.eps2},
            "n": self.n,
            "mode": self.mode,
            "holds": self.holds,
            "sets_checked": self.sets_checked,
            "worst": None if self.worst is None else {
                "x": list(self.worst[0]), "survivors": self.worst[1],
                "required": self.worst[2]},
            "counterexample": None if self.counterexample is None else {
                "x": list(self.counterexample[0]),
                "deleted_edges": [list(e) for e in self.counterexample[1]],
                "survivors": self.counterexample[2],
                "required": self.counterexample[3]},
        }


def _check_one_set(g: Graph, xset: tuple[int, ...], d: Fraction, params: ExpanderParams):
    """Returns (ok, survivors, required, deleted)."""
    r = rho(len(xset), params)
    required = r * len(xset)
    budget = math.floor(float(d) * r * len(xset))
    survivors, deleted = adversarial_boundary_deletion(g, xset, budget)
    return len(survivors) >= required, len(survivors), required, deleted


def verify_robust_expander(g: Graph, params: ExpanderParams, mode: str = "auto",
                           exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
                           trials: int = DEFAULT_SAMPLE_TRIALS,
                           seed: int = 0, threads: int = 1) -> ExpansionCertificate:
    """Check the robust-expansion property of ``g`` for ``params``.

    Every X with t/2 <= |X| <= n/2 must keep |N(X)| >= rho(|X|)*|X| after an
    adversary deletes up to floor(d(G)*rho(|X|)*|X|) edges.  ``mode`` is
    "exhaustive" (n capped), "sampled", or "auto" which picks exhaustive
    exactly when n fits under the cap.
    """
    if g.n == 0:
        raise GraphError("cannot verify the empty graph")
    if mode == "auto":
        mode = "exhaustive" if g.n <= exhaustive_cap else "sampled"
    if mode == "exhaustive" and g.n > exhaustive_cap:
        raise ParameterError(
            f"exhaustive verification needs n <= {exhaustive_cap}, got {g.n}")
    d = g.average_degree()
    lo = math.ceil(params.t / 2.0)
    hi = g.n // 2
    if lo > hi:
        return ExpansionCertificate(params, g.n, "vacuous", True, 0)

    checked = 0
    worst: tuple[tuple[int, ...], int, float] | None = None

    def consider(xset: tuple[int, ...]):
        nonlocal checked, worst
        ok, survivors, required, deleted = _check_one_set(g, xset, d, params)
        checked += 1
        if not ok:
            return ExpansionCertificate(params, g.n, mode, False, checked,
                                        worst, (xset, tuple(deleted), survivors, required))
        margin = survivors - required
        if worst is None or margin < worst[1] - worst[2]:
            worst = (xset, survivors, required)
        return None

    if mode == "exhaustive":
        sizes = range(lo, hi + 1)
        if threads > 1:
            # Chunked read-only scan; results merged deterministically.
            from concurrent.futures import ThreadPoolExecutor

            def scan(k: int):
                for xs in combinations(range(g.n), k):
                    ok, survivors, required, deleted = _check_one_set(g, xs, d, params)
                    yield xs, ok, survivors, required, deleted

            with ThreadPoolExecutor(max_workers=threads) as pool:
                for rows in pool.map(lambda k: list(scan(k)), sizes):
                    for xs, ok, survivors, required, deleted in rows:
                        checked += 1
                        if not ok:
                            return ExpansionCertificate(
                                params, g.n, mode, False, checked, worst,
                                (xs, tuple(deleted), survivors, required))
                        margin = survivors - required
                        if worst is None or margin < worst[1] - worst[2]:
                            worst = (xs, survivors, required)
        else:
            for k in sizes:
                for xs in combinations(range(g.n), k):
                    hit = consider(xs)
                    if hit is not None:
                        return hit
    else:
        rng = random.Random(seed)
        for _ in range(trials):
            k = rng.randint(lo, hi)
            xs = tuple(sorted(rng.sample(range(g.n), k)))
            hit = consider(xs)
            if hit is not None:
                return hit
    return ExpansionCertificate(params, g.n, mode, True, checked, worst)


@dataclass
class ExtractionResult:
    """A well-expanding subgraph plus the evidence gathered on the way.

    ``subgraph.names`` maps its vertices back to ids of the input graph.
    """

    subgraph: Graph
    params: ExpanderParams
    certificate: ExpansionCertificate
    phi_trace: list[float] = field(default_factory=list)

    @property
    def original_vertices(self) -> tuple[int, ...]:
        return tuple(self.subgraph.names)

    def to_json(self) -> dict:
        return {
            "schema": "minorforge/extraction-v1",
            "vertices": list(self.subgraph.names),
            "n": self.subgraph.n,
            "m": self.subgraph.m(),
            "average_degree": str(self.subgraph.average_degree()),
            "phi_trace": self.phi_trace,
            "certificate": self.certificate.to_json(),
        }


class ExtractionError(RuntimeError):
    """Internal failure: the climb ended below its guaranteed degree floor."""


def extract_expander(g: Graph, eps2: float = 0.25, eps1: float | None = None,
                     C: float = DEFAULT_C,
                     exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
                     trials: int = DEFAULT_SAMPLE_TRIALS, seed: int = 0) -> ExtractionResult:
    """Find a subgraph h with d(h) >= (1-delta)d(g) and min degree >= d(h)/2
    that the verifier endorses (exhaustively when small, sampled otherwise).

    Strategy: hill-climb on the density potential.  Shedding any vertex of
    degree < d(H)/2 strictly raises the potential; when verification finds a
    poorly expanding X we move to whichever of H[B(X)] and H - X scores
    higher, provided that improves the potential.  Since every move raises
    the potential and the weight only grows as graphs shrink, the final
    average degree can't fall below (1-delta) times the original.
    """
    if g.n == 0 or g.m() == 0:
        raise GraphError("extraction needs a graph with at least one edge")
    if eps1 is None:
        eps1 = 1.0 / (10.0 * C)
    d0 = g.average_degree()
    params = ExpanderParams(eps1=eps1, t=eps2 * float(d0), C=C, eps2=eps2)
    if not params.meets_extraction_bounds():
        raise ParameterError("extraction requires C > 30 and eps1 <= 1/(10C)")

    cur = g
    trace = [phi_score(cur, params)]
    round_seed = seed
    while True:
        # Shed low-degree vertices; each removal strictly improves density.
        while True:
            d = cur.average_degree()
            victim = next((v for v in range(cur.n)
                           if Fraction(cur.degree(v)) < d / 2), None)
            if victim is None:
                break
            cur = cur.without_vertices([victim])
            trace.append(phi_score(cur, params))
        cert = verify_robust_expander(cur, params, "auto", exhaustive_cap,
                                      trials, seed=round_seed)
        round_seed += 1
        if cert.holds or cert.counterexample is None:
            break
        xs = set(cert.counterexample[0])
        phi_here = phi_score(cur, params)
        cands = []
        ball = cur.ball(xs, 1)
        if 0 < len(ball) < cur.n:
            cands.append(cur.induced(ball))
        rest = set(range(cur.n)) - xs
        if rest:
            sub = cur.induced(rest)
            if sub.m() > 0:
                cands.append(sub)
        cands = [c for c in cands if c.m() > 0]
        if not cands:
            break
        best = max(cands, key=lambda c: phi_score(c, params))
        if phi_score(best, params) <= phi_here:
            break
        cur = best
        trace.append(phi_score(cur, params))

    dh = cur.average_degree()
    if float(dh) < (1.0 - params.delta) * float(d0) - 1e-12:
        raise ExtractionError("potential climb ended below the degree floor")
    if any(Fraction(cur.degree(v)) < dh / 2 for v in range(cur.n)):
        raise ExtractionError("minimum-degree shedding left a light vertex")
    return ExtractionResult(subgraph=cur, params=params, certificate=cert, phi_trace=trace)
