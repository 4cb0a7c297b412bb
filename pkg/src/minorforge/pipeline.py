"""End-to-end embedding runs: pick anchors, route paths, fall back honestly.

``embed_subdivision`` chains strategies from cheap to exhaustive.  Every
strategy's output goes through the same validator before it may be
reported, and a strategy that fails leaves a reason in the report rather
than silently vanishing.  The exhaustive oracle runs last, so "absent" from
this function carries the oracle's proof, while greedy successes carry the
validated witness of whichever stage found it first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .expander import (ExtractionError, ExtractionResult, extract_expander)
from .graphs import Graph
from .oracle import (DEFAULT_ORACLE_BUDGET, OracleResult, find_subdivision,
                     validate_subdivision)
from .paths import _bfs_set_to_set
from .structures import build_web


def far_apart_anchors(g: Graph, count: int, min_dist: int,
                      avoid: tuple[int, ...] = (), by_degree: bool = False) -> list[int]:
    """Greedy anchor packing: scan candidates (ascending id, or descending
    degree when ``by_degree``) and keep those at distance >= min_dist from
    every anchor chosen so far."""
    banned = set(avoid)
    chosen: list[int] = []
    too_close: set[int] = set()
    order = sorted(range(g.n), key=(lambda v: (-g.degree(v), v)) if by_degree
                   else (lambda v: v))
    for v in order:
        if v in banned or v in too_close:
            continue
        chosen.append(v)
        if len(chosen) == count:
            break
        too_close |= g.ball([v], min_dist - 1)
    return chosen


def subexpander_family(g: Graph, count: int, separation: int,
                       eps2: float = 0.25, min_average_degree: float = 4.0,
                       seed: int = 0) -> list[ExtractionResult]:
    """Repeatedly extract expanders from what is left after carving out
    separation balls around the earlier ones.  Stops early when the residue
    is too thin; vertex names in each result refer to g."""
    removed: set[int] = set()
    out: list[ExtractionResult] = []
    for _ in range(count):
        keep = sorted(set(range(g.n)) - removed)
        if len(keep) < 3:
            break
        sub = g.induced(keep)
        if sub.m() == 0 or float(sub.average_degree()) < min_average_degree:
            break
        try:
            res = extract_expander(sub, eps2=eps2, seed=seed)
        except ExtractionError:
            break
        out.append(res)
        core = [int(v) for v in res.subgraph.names]
        removed |= g.ball(core, separation)
        removed |= set(core)
    return out


@dataclass
class EmbedAttempt:
    strategy: str
    ok: bool
    reason: str

    def to_json(self) -> dict:
        return {"strategy": self.strategy, "ok": self.ok, "reason": self.reason}


@dataclass
class EmbedReport:
    outcome: str                      # "embedded" | "absent" | "undecided"
    strategy: str | None
    anchors: dict[int, int] | None
    paths: dict[tuple[int, int], list[int]] | None
    attempts: list[EmbedAttempt] = field(default_factory=list)
    oracle: OracleResult | None = None
    extraction: ExtractionResult | None = None

    @property
    def embedded(self) -> bool:
        return self.outcome == "embedded"

    def to_json(self) -> dict:
        return {"schema": "minorforge/embed-v1", "outcome": self.outcome,
                "strategy": self.strategy,
                "anchors": self.anchors,
                "paths": None if self.paths is None else
                {f"{u},{v}": p for (u, v), p in self.paths.items()},
                "attempts": [a.to_json() for a in self.attempts],
                "oracle": None if self.oracle is None else self.oracle.to_json()}


def _route_all(host: Graph, pattern: Graph, anchors: dict[int, int]
               ) -> dict[tuple[int, int], list[int]] | None:
    """One greedy pass: realise pattern edges as shortest host paths, most
    demanding endpoints first, interiors kept disjoint.  No backtracking."""
    paths: dict[tuple[int, int], list[int]] = {}
    interior: set[int] = set()
    anchor_vs = set(anchors.values())
    for e in sorted(pattern.edges,
                    key=lambda e: -(pattern.degree(e[0]) + pattern.degree(e[1]))):
        a, b = anchors[e[0]], anchors[e[1]]
        banned = (anchor_vs - {a, b}) | interior
        path = _bfs_set_to_set(host, {a}, {b}, banned)
        if path is None:
            return None
        paths[e] = path
        interior |= set(path[1:-1])
    return paths


def _anchored_attempt(host: Graph, pattern: Graph, spacing: int
                      ) -> tuple[dict[int, int], dict[tuple[int, int], list[int]]] | str:
    picks = far_apart_anchors(host, pattern.n, spacing, by_degree=True)
    if len(picks) < pattern.n:
        return f"only {len(picks)} anchors at spacing {spacing}"
    p_order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    picks.sort(key=lambda v: (-host.degree(v), v))
    anchors = dict(zip(p_order, picks))
    for pv, hv in anchors.items():
        if host.degree(hv) < pattern.degree(pv):
            return f"anchor {hv} too thin for pattern vertex {pv}"
    paths = _route_all(host, pattern, anchors)
    if paths is None:
        return "path routing ran out of disjoint room"
    return anchors, paths


def _star_core(pattern: Graph) -> int | None:
    """A vertex adjacent to all others, if the pattern is a near-star."""
    for v in range(pattern.n):
        if pattern.degree(v) == pattern.n - 1:
            return v
    return None


def _web_attempt(host: Graph, pattern: Graph
                 ) -> tuple[dict[int, int], dict[tuple[int, int], list[int]]] | str:
    """Route a star-shaped pattern through a web: the web core anchors the
    centre and each center path carries one ray."""
    centre = _star_core(pattern)
    if centre is None:
        return "pattern has no dominating centre"
    rays = [v for v in range(pattern.n) if v != centre]
    extra = [e for e in pattern.edges if centre not in e]
    web, report = build_web(host, (), h0=len(rays), h1=1, h2=1, h3=host.n)
    if web is None:
        return f"no web: {report.reason}"
    anchors = {centre: web.core}
    paths: dict[tuple[int, int], list[int]] = {}
    used: set[int] = {web.core}
    for rv, (arm, unit) in zip(rays, zip(web.arms, web.units)):
        walk = list(arm)                 # arm runs web core -> unit core
        anchors[rv] = unit.core
        e = (min(centre, rv), max(centre, rv))
        paths[e] = walk if e[0] == centre else walk[::-1]
        used |= set(walk)
    if extra:
        interior = used - set(anchors.values())
        for u, v in extra:
            banned = (set(anchors.values()) - {anchors[u], anchors[v]}) | interior
            p = _bfs_set_to_set(host, {anchors[u]}, {anchors[v]}, banned)
            if p is None:
                return "web rays placed but chords would not route"
            paths[(u, v)] = p
            interior |= set(p[1:-1])
    return anchors, paths


def embed_subdivision(host: Graph, pattern: Graph, seed: int = 0,
                      budget: int = DEFAULT_ORACLE_BUDGET,
                      eps2: float = 0.25) -> EmbedReport:
    """Find a subdivision of the pattern in the host, cheap passes first.

    Strategies, in order: greedy far-apart anchoring on the raw host; the
    same on an extracted expander core; web routing for star-like patterns;
    finally the exhaustive oracle, whose negative answer is a proof.
    """
    attempts: list[EmbedAttempt] = []

    def accept(strategy: str, anchors: dict[int, int],
               paths: dict[tuple[int, int], list[int]],
               extraction: ExtractionResult | None = None) -> EmbedReport | None:
        bad = validate_subdivision(host, pattern, anchors, paths)
        if bad:
            attempts.append(EmbedAttempt(strategy, False, f"invalid: {bad[0]}"))
            return None
        attempts.append(EmbedAttempt(strategy, True, "validated"))
        return EmbedReport("embedded", strategy, anchors, paths, attempts,
                           extraction=extraction)

    for spacing in (3, 2, 1):
        got = _anchored_attempt(host, pattern, spacing)
        name = f"anchored-paths/{spacing}"
        if isinstance(got, str):
            attempts.append(EmbedAttempt(name, False, got))
            continue
        report = accept(name, *got)
        if report:
            return report

    if host.n >= 8 and host.m() and float(host.average_degree()) >= 4.0:
        try:
            ext = extract_expander(host, eps2=eps2, seed=seed)
            core = ext.subgraph
            back = [int(v) for v in core.names]
            got = _anchored_attempt(core, pattern, 2)
            if isinstance(got, str):
                attempts.append(EmbedAttempt("expander-paths", False, got))
            else:
                anchors = {pv: back[hv] for pv, hv in got[0].items()}
                paths = {e: [back[v] for v in p] for e, p in got[1].items()}
                report = accept("expander-paths", anchors, paths, extraction=ext)
                if report:
                    return report
        except ExtractionError as err:
            attempts.append(EmbedAttempt("expander-paths", False, str(err)))
    else:
        attempts.append(EmbedAttempt("expander-paths", False,
                                     "host too small or too sparse"))

    got = _web_attempt(host, pattern)
    if isinstance(got, str):
        attempts.append(EmbedAttempt("web-routing", False, got))
    else:
        report = accept("web-routing", *got)
        if report:
            return report

    oracle = find_subdivision(host, pattern, budget=budget)
    attempts.append(EmbedAttempt("oracle", oracle.found, oracle.outcome))
    if oracle.found:
        anchors = {int(k): v for k, v in oracle.witness["anchors"].items()}
        paths = {tuple(int(x) for x in k.split(",")): p
                 for k, p in oracle.witness["paths"].items()}
        return EmbedReport("embedded", "oracle", anchors, paths, attempts,
                           oracle=oracle)
    outcome = "absent" if oracle.outcome == "absent" else "undecided"
    return EmbedReport(outcome, None, None, None, attempts, oracle=oracle)
