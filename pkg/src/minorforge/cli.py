"""Command line front end.

Every subcommand reads graphs in the p/e/c/f text format (a file path or
``-`` for stdin), prints text, JSON or DOT, and exits with:

* 0: positive verdict (verified, found, built, generated)
* 1: negative verdict (counterexample, absent, no separator)
* 2: inconclusive (budget exhausted, retries exhausted, heuristic miss)
* 3: usage or input error

JSON output wraps the payload in a run manifest (argv, seed, timing) so a
run can be replayed.  ``--figure PATH`` additionally renders the graph the
command worked on, with whatever classes or paths it produced highlighted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import structures
from .expander import (ExpanderParams, ExtractionError, ParameterError,
                       extract_expander, verify_robust_expander)
from .generators import (gen_complete_bipartite, gen_disjoint_cliques,
                         gen_grid, gen_planar_with_k4s, graph_stats,
                         minor_degree_bounds)
from .graphs import Graph, GraphError, format_graph_text, parse_graph_text, to_dot
from .hpartition import (PartitionError, bandwidth_order, check_separable,
                         partition_onto_odd_cycle, partition_onto_sun)
from .oracle import (DEFAULT_ORACLE_BUDGET, find_minor, find_subdivision,
                     is_k4_minor_free)
from .paths import (PathBoundError, check_path_intersection_bound,
                    connect_avoiding, consecutive_shortest_paths,
                    growth_profile)
from .pipeline import embed_subdivision, subexpander_family
from .planar import (PlanarEmbedding, bipartite_subdivision, embed_planar,
                     gen_triangulation, one_sided_subdivision)
from .structures import (build_nakjis, build_unit, build_web,
                         find_disjoint_stars, find_sun)
from .transforms import bipartite_double, split_high_degree


class _Outcome:
    """What a handler produced: exit code, JSON payload, text lines, and an
    optional (graph, groups, bold_paths) triple for --figure."""

    def __init__(self, code: int, payload: dict, lines: list[str],
                 figure: tuple | None = None):
        self.code = code
        self.payload = payload
        self.lines = lines
        self.figure = figure


def _read_graph(spec: str) -> tuple[Graph, list[list[int]] | None]:
    if spec == "-":
        return parse_graph_text(sys.stdin.read())
    with open(spec, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def _ids(text: str) -> list[int]:
    if not text:
        return []
    return [int(tok) for tok in text.split(",") if tok != ""]


def _graph_out(g: Graph, faces=None) -> list[str]:
    return format_graph_text(g, faces=faces).rstrip("\n").split("\n")


# ---------------------------------------------------------------------------
# handlers


def _cmd_extract(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    try:
        res = extract_expander(g, eps2=args.eps2, eps1=args.eps1, C=args.bigc,
                               exhaustive_cap=args.exhaustive_cap,
                               seed=args.seed)
    except ExtractionError as err:
        return _Outcome(1, {"error": str(err)}, [f"extraction failed: {err}"])
    sub = res.subgraph
    core = [int(v) for v in sub.names]
    lines = [f"extracted {sub.n} vertices, average degree "
             f"{float(sub.average_degree()):.4f} "
             f"(input {float(g.average_degree()):.4f})",
             "core: " + ",".join(str(v) for v in core)]
    lines += _graph_out(sub)
    return _Outcome(0, res.to_json(), lines, (g, [core], []))


def _cmd_verify(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    params = ExpanderParams(eps1=args.eps1, t=args.t, C=args.bigc)
    cert = verify_robust_expander(g, params, mode=args.mode,
                                  exhaustive_cap=args.exhaustive_cap,
                                  trials=args.trials, seed=args.seed,
                                  threads=args.threads)
    lines = [f"robust expansion {'holds' if cert.holds else 'fails'} "
             f"({cert.mode}, {cert.sets_checked} sets)"]
    groups = []
    if not cert.holds and cert.counterexample:
        xs = list(cert.counterexample[0])
        lines.append("violating set: " + ",".join(map(str, xs)))
        groups = [xs]
    return _Outcome(0 if cert.holds else 1, cert.to_json(), lines,
                    (g, groups, []))


def _cmd_connect(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    path = connect_avoiding(g, _ids(args.src), _ids(args.dst), _ids(args.avoid))
    if path is None:
        return _Outcome(1, {"path": None}, ["separated"], (g, [], []))
    return _Outcome(0, {"path": path},
                    ["path: " + "-".join(map(str, path))], (g, [], [path]))


def _cmd_grow(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    x, y = _ids(args.x), _ids(args.y)
    ps = consecutive_shortest_paths(g, x, args.r, y, args.q)
    growth = growth_profile(g, x, y, ps, args.r)
    meet = check_path_intersection_bound(g, x, y, ps, args.r)
    payload = {"paths": ps, "growth": growth.to_json(),
               "intersections": meet.to_json()}
    lines = [f"found {len(ps)} paths"]
    lines += ["  " + "-".join(map(str, p)) for p in ps]
    lines.append(f"growth sizes: {growth.sizes}")
    lines.append(f"intersection bound ok: {meet.ok}")
    return _Outcome(0 if meet.ok else 1, payload, lines, (g, [x, y], ps))


def _shortfall_code(reason: str | None) -> int:
    # a builder that ran out of budget is inconclusive; any other miss is a
    # definitive negative for the attempted shape
    return 2 if reason and "budget" in reason else 1


def _cmd_build(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    avoid = _ids(args.avoid)
    if args.what == "star":
        stars, deficiency = find_disjoint_stars(g, avoid, args.count, args.leaves)
        payload = {"stars": [[c, list(ls)] for c, ls in stars],
                   "deficiency": deficiency}
        lines = [f"{len(stars)} stars, deficiency {deficiency}"]
        lines += [f"  {c}: " + ",".join(map(str, ls)) for c, ls in stars]
        groups = [[c, *ls] for c, ls in stars]
        return _Outcome(0 if deficiency == 0 else 1, payload, lines,
                        (g, groups, []))
    if args.what == "unit":
        unit, report = build_unit(g, avoid, args.h1, args.h2, args.h3)
        if unit is None:
            return _Outcome(_shortfall_code(report.reason),
                            {"error": report.reason},
                            [f"no unit: {report.reason}"], (g, [], []))
        return _Outcome(0, unit.to_json(), [f"unit with core {unit.core}"],
                        (g, [sorted(unit.vertices())], [list(p) for p in unit.spokes]))
    if args.what == "web":
        web, report = build_web(g, avoid, args.h0, args.h1, args.h2, args.h3)
        if web is None:
            return _Outcome(_shortfall_code(report.reason),
                            {"error": report.reason},
                            [f"no web: {report.reason}"], (g, [], []))
        return _Outcome(0, web.to_json(), [f"web with core {web.core}"],
                        (g, [sorted(web.vertices())], [list(p) for p in web.arms]))
    subs = [[int(v) for v in res.subgraph.names]
            for res in subexpander_family(g, args.count, args.r, seed=args.seed)]
    nakjis, report = build_nakjis(g, avoid, args.t, args.s, args.r, args.tau,
                                  args.count, subs)
    payload = {"nakjis": [n.to_json() for n in nakjis],
               "reason": report.reason}
    lines = [f"built {len(nakjis)} of {args.count} nakjis"]
    code = 0 if len(nakjis) >= args.count else _shortfall_code(report.reason)
    groups = [sorted(n.vertices()) for n in nakjis]
    return _Outcome(code, payload, lines, (g, groups, []))


def _cmd_partition(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    if g.bipartition() is None:
        return _Outcome(3, {"error": "pattern graph must be bipartite"},
                        ["pattern graph must be bipartite"])
    bw = bandwidth_order(g)
    try:
        if args.what == "cycle":
            plan = partition_onto_odd_cycle(g, args.r, args.d, bw=bw,
                                            seed=args.seed, retries=args.retries)
            groups = plan.classes
            lines = [f"classes (cap {plan.cap:.3f}, seed {plan.seed_used}):"]
            lines += [f"  X{i}: " + ",".join(map(str, c))
                      for i, c in enumerate(plan.classes)]
        else:
            if args.a < 2 or not 0 <= args.b <= args.a:
                return _Outcome(3, {"error": "sun shape needs --a >= 2 and "
                                             "0 <= --b <= --a"},
                                ["sun shape needs --a >= 2 and 0 <= --b <= --a"])
            leaves = tuple((2 * args.a + j, 2 * j + 1) for j in range(args.b))
            sun = structures.Sun(tuple(range(2 * args.a)), leaves)
            plan = partition_onto_sun(g, sun, args.r, args.d, bw=bw,
                                      seed=args.seed, retries=args.retries)
            groups = plan.cycle_classes + plan.leaf_classes
            lines = [f"classes (cap {plan.cap:.3f}, seed {plan.seed_used}):"]
            lines += [f"  cycle[{i}]: " + ",".join(map(str, c))
                      for i, c in enumerate(plan.cycle_classes)]
            lines += [f"  leaf[{i}]: " + ",".join(map(str, c))
                      for i, c in enumerate(plan.leaf_classes)]
    except PartitionError as err:
        # an exhausted walk search is inconclusive; a bad shape is usage
        code = 2 if err.near_miss is not None else 3
        return _Outcome(code, {"error": str(err)}, [f"no plan: {err}"])
    return _Outcome(0, plan.to_json(), lines, (g, groups, []))


def _cmd_separable(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    res = check_separable(g, args.alpha)
    if res.found:
        lines = ["separator: " + ",".join(map(str, res.separator))]
        return _Outcome(0, res.to_json(), lines, (g, [res.separator], []))
    verdict = "no separator exists" if res.exact else "no separator found (heuristic)"
    return _Outcome(1 if res.exact else 2, res.to_json(), [verdict], (g, [], []))


def _cmd_transform(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    if args.what == "split":
        res = split_high_degree(g, args.k)
        lines = [f"{res.splits} splits, {res.graph.n} vertices"]
    else:
        res = bipartite_double(g)
        lines = [f"doubled {len(res.links)} vertices, {res.graph.n} total"]
    lines += _graph_out(res.graph)
    groups = [[w for _, w in res.links]]
    return _Outcome(0, res.to_json(), lines, (res.graph, groups, []))


def _cmd_planar_subdivide(args) -> _Outcome:
    g, faces = _read_graph(args.graph)
    if faces is None:
        emb = embed_planar(g)
        if emb is None:
            return _Outcome(3, {"error": "graph is not planar"},
                            ["graph is not planar"])
    else:
        emb = PlanarEmbedding(g, faces)
        bad = emb.validate()
        if bad:
            return _Outcome(3, {"error": bad[0]}, [f"bad embedding: {bad[0]}"])
    try:
        res = bipartite_subdivision(emb)
    except GraphError as err:
        return _Outcome(3, {"error": str(err)}, [str(err)])
    lines = [f"subdivided {len(res.subdivided)} edges, "
             f"{res.graph.n} vertices, bipartite"]
    lines += _graph_out(res.graph)
    return _Outcome(0, res.to_json(), lines,
                    (res.graph, [res.a_side, res.b_side], []))


def _cmd_one_sided(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    try:
        res = one_sided_subdivision(g, set(_ids(args.x)))
    except GraphError as err:
        return _Outcome(3, {"error": str(err)}, [str(err)])
    lines = [f"subdivided {len(res.subdivided)} edges, {res.graph.n} vertices"]
    lines += _graph_out(res.graph)
    return _Outcome(0, res.to_json(), lines,
                    (res.graph, [res.a_side, res.b_side], []))


def _cmd_gen(args) -> _Outcome:
    faces = None
    if args.what == "bipartite":
        g = gen_complete_bipartite(args.s, args.n)
    elif args.what == "grid":
        g = gen_grid(_ids(args.dims))
    elif args.what == "cliques":
        g = gen_disjoint_cliques(args.q, args.copies)
    elif args.what == "planar-k4":
        g = gen_planar_with_k4s(args.t)
    else:
        emb = gen_triangulation(args.t, seed=args.seed)
        g, faces = emb.graph, emb.faces
    payload = {"n": g.n, "edges": g.edges}
    if faces is not None:
        payload["faces"] = faces
    return _Outcome(0, payload, _graph_out(g, faces), (g, [], []))


def _cmd_stats(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    st = graph_stats(g, exact_cap=args.exhaustive_cap)
    lines = [f"n={st.n} m={st.m} avg={st.average_degree:.4f} max={st.max_degree}",
             f"independence={st.independence} independence2={st.independence2} "
             f"chromatic={st.chromatic} exact={st.exact}"]
    return _Outcome(0, st.to_json(), lines, (g, [], []))


def _cmd_bounds(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    b = minor_degree_bounds(g)
    lines = [f"degree window [{b.lower}, {b.upper}] "
             f"(alpha={b.alpha}, alpha2={b.alpha2}, witness s={b.witness_s})"]
    return _Outcome(0, b.to_json(), lines, (g, [], []))


def _cmd_oracle(args) -> _Outcome:
    if args.what == "k4free":
        g, _ = _read_graph(args.graph)
        free = is_k4_minor_free(g)
        word = "k4-minor-free" if free else "contains a k4 minor"
        return _Outcome(0 if free else 1, {"k4_minor_free": free}, [word],
                        (g, [], []))
    host, _ = _read_graph(args.graph)
    pattern, _ = _read_graph(args.pattern)
    fn = find_subdivision if args.what == "subdivision" else find_minor
    res = fn(host, pattern, budget=args.budget)
    code = {"found": 0, "absent": 1, "timeout": 2}[res.outcome]
    lines = [f"{args.what} {res.outcome} after {res.nodes_spent} nodes"]
    bold = []
    groups = []
    if res.found and args.what == "subdivision":
        bold = list(res.witness["paths"].values())
        groups = [list(res.witness["anchors"].values())]
    elif res.found:
        groups = list(res.witness["branch_sets"].values())
    return _Outcome(code, res.to_json(), lines, (host, groups, bold))


def _cmd_embed(args) -> _Outcome:
    host, _ = _read_graph(args.graph)
    pattern, _ = _read_graph(args.pattern)
    rep = embed_subdivision(host, pattern, seed=args.seed, budget=args.budget)
    code = {"embedded": 0, "absent": 1, "undecided": 2}[rep.outcome]
    lines = [f"{rep.outcome}" + (f" via {rep.strategy}" if rep.strategy else "")]
    for att in rep.attempts:
        lines.append(f"  {att.strategy}: {'ok' if att.ok else att.reason}")
    bold = list(rep.paths.values()) if rep.paths else []
    groups = [list(rep.anchors.values())] if rep.anchors else []
    return _Outcome(code, rep.to_json(), lines, (host, groups, bold))


def _cmd_bandwidth(args) -> _Outcome:
    g, _ = _read_graph(args.graph)
    bw = bandwidth_order(g, exact_cap=args.exhaustive_cap)
    lines = [f"bandwidth {bw.b} ({'exact' if bw.exact else 'witnessed'})",
             "order: " + ",".join(map(str, bw.order))]
    return _Outcome(0, bw.to_json(), lines, (g, [], []))


# ---------------------------------------------------------------------------
# wiring


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    # registered on the top parser with real defaults and on every
    # subcommand with SUPPRESS, so the flags parse in either position
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget", type=int, default=d(DEFAULT_ORACLE_BUDGET))
    p.add_argument("--format", choices=("text", "json", "dot"),
                   default=d("text"))
    p.add_argument("--exhaustive-cap", type=int, default=d(18))
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--figure", metavar="PATH", default=d(None),
                   help="also render the working graph to this file")


class _Parser(argparse.ArgumentParser):
    # usage problems share the input-error exit code
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="minorforge",
        description="robust expanders, path systems, and sparse patterns")
    _global_flags(top, suppress=False)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(handler=fn)
        _global_flags(p, suppress=True)
        return p

    p = add("extract-expander", _cmd_extract, help="pull out a dense expanding core")
    p.add_argument("graph")
    p.add_argument("--eps2", type=float, default=0.25)
    p.add_argument("--eps1", type=float, default=None)
    p.add_argument("--bigc", type=float, default=31.0)

    p = add("verify-expander", _cmd_verify, help="check robust expansion")
    p.add_argument("graph")
    p.add_argument("--eps1", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--bigc", type=float, default=31.0)
    p.add_argument("--mode", choices=("auto", "exhaustive", "sampled"),
                   default="auto")
    p.add_argument("--trials", type=int, default=200)

    p = add("connect", _cmd_connect, help="shortest path between vertex sets")
    p.add_argument("graph")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--avoid", default="")

    p = add("grow", _cmd_grow, help="consecutive shortest paths out of a set")
    p.add_argument("graph")
    p.add_argument("--x", required=True)
    p.add_argument("--y", default="")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, default=1)

    p = add("build", _cmd_build, help="assemble stars, units, webs or nakjis")
    p.add_argument("what", choices=("star", "unit", "web", "nakji"))
    p.add_argument("graph")
    p.add_argument("--avoid", default="")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--leaves", type=int, default=1)
    p.add_argument("--h0", type=int, default=1)
    p.add_argument("--h1", type=int, default=1)
    p.add_argument("--h2", type=int, default=1)
    p.add_argument("--h3", type=int, default=3)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--tau", type=float, default=2.0)

    p = add("partition", _cmd_partition, help="spread a bipartite pattern "
            "onto an odd cycle or a sun")
    p.add_argument("what", choices=("cycle", "sun"))
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--a", type=int, default=0, help="sun: half cycle length")
    p.add_argument("--b", type=int, default=0, help="sun: leaf count")
    p.add_argument("--retries", type=int, default=64)

    p = add("separable", _cmd_separable, help="find a balanced vertex separator")
    p.add_argument("graph")
    p.add_argument("--alpha", type=float, required=True)

    p = add("transform", _cmd_transform, help="degree splitting, bipartite doubling")
    p.add_argument("what", choices=("split", "double"))
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=3)

    p = add("planar-subdivide", _cmd_planar_subdivide,
            help="one subdivision per triangle via a dual matching")
    p.add_argument("graph")

    p = add("one-sided-subdivide", _cmd_one_sided,
            help="subdivide every edge missing an independent set")
    p.add_argument("graph")
    p.add_argument("--x", required=True)

    p = add("gen", _cmd_gen, help="sample hosts and patterns")
    p.add_argument("what", choices=("bipartite", "grid", "cliques",
                                    "planar-k4", "triangulation"))
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--dims", default="3,3")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--copies", type=int, default=2)
    p.add_argument("--t", type=int, default=8)

    p = add("stats", _cmd_stats, help="counting invariants")
    p.add_argument("graph")

    p = add("bounds", _cmd_bounds, help="average-degree window for minors")
    p.add_argument("graph")

    p = add("bandwidth", _cmd_bandwidth, help="small-bandwidth ordering")
    p.add_argument("graph")

    p = add("oracle", _cmd_oracle, help="exhaustive containment checks")
    p.add_argument("what", choices=("subdivision", "minor", "k4free"))
    p.add_argument("graph")
    p.add_argument("pattern", nargs="?")

    p = add("embed", _cmd_embed, help="strategy-chained subdivision embedding")
    p.add_argument("graph")
    p.add_argument("pattern")

    return top


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.what != "k4free" and not args.pattern:
        parser.error("oracle subdivision/minor needs a pattern graph")
    started = time.monotonic()
    try:
        out: _Outcome = args.handler(args)
    except (GraphError, ParameterError, PathBoundError, ValueError) as err:
        out = _Outcome(3, {"error": str(err)}, [f"error: {err}"])
    except OSError as err:
        out = _Outcome(3, {"error": str(err)}, [f"error: {err}"])

    if args.figure and out.figure is not None:
        from .viz import render_graph
        g, groups, bold = out.figure
        render_graph(g, args.figure, groups=groups, bold_paths=bold,
                     title=args.command)
        out.lines.append(f"figure written to {args.figure}")

    if args.format == "json":
        doc = {"command": args.command, "result": out.payload,
               "manifest": {"argv": argv, "seed": args.seed,
                            "elapsed_ms": round(1000 * (time.monotonic() - started), 3),
                            "exit": out.code}}
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "dot" and out.figure is not None:
        g, groups, _ = out.figure
        palette = ("red", "blue", "green", "orange", "purple", "brown")
        highlight = {v: palette[i % len(palette)]
                     for i, grp in enumerate(groups) for v in grp}
        print(to_dot(g, highlight))
    else:
        for line in out.lines:
            print(line)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
