"""Acceptance checks: one test per guarantee, run at the documented scale.

Each test prints a single summary line (visible under ``pytest -s`` or on
failure) with the corpus size, the measured result, and the time budget it
must stay inside.
"""

import itertools
import math
import random
import time

from minorforge import (
    BandwidthResult,
    ExpanderParams,
    Graph,
    Sun,
    bipartite_double,
    bipartite_subdivision,
    check_path_intersection_bound,
    complete_graph,
    consecutive_shortest_paths,
    cycle_graph,
    embed_subdivision,
    extract_expander,
    find_minor,
    find_subdivision,
    format_graph_text,
    gen_complete_bipartite,
    gen_grid,
    gen_planar_with_k4s,
    gen_triangulation,
    graph_stats,
    is_k4_minor_free,
    minor_degree_bounds,
    order_bandwidth,
    partition_onto_odd_cycle,
    partition_onto_sun,
    path_graph,
    rho,
    split_high_degree,
    two_color_classes,
    validate_cycle_partition,
    validate_subdivision,
    validate_sun_partition,
    verify_robust_expander,
)
from minorforge.cli import main as cli_main


def _rand_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _banded_bipartite(rng, n, b):
    edges = []
    for u in range(n):
        for v in range(u + 1, min(n, u + b + 1)):
            if (u + v) % 2 == 1 and rng.random() < 0.7:
                edges.append((u, v))
    return Graph(n, edges)


def test_triangulation_corpus_subdivides_exactly():
    started = time.time()
    count = 0
    for t in range(4, 11):
        for seed in range(8):
            emb = gen_triangulation(t, seed=seed)
            g = emb.graph
            sd = bipartite_subdivision(emb)
            assert sd.graph.n == 2 * t - 2
            a = set(sd.a_side)
            assert all((u in a) != (v in a) for u, v in sd.graph.edges)
            kept = {e for e in sd.graph.edges if e[0] < g.n and e[1] < g.n}
            assert kept | set(sd.midpoint.keys()) == set(g.edges)
            count += 1
    elapsed = time.time() - started
    assert count >= 50
    assert elapsed < 60
    print(f"subdivision corpus: {count} triangulations, all exact, {elapsed:.1f}s < 60s")


def test_extraction_degree_guarantees_on_random_corpus():
    started = time.time()
    rng = random.Random(2)
    done = 0
    for i in range(100):
        n = rng.choice([12, 20, 40, 80, 120, 200])
        g = _rand_graph(rng, n, rng.choice([0.05, 0.1, 0.3, 0.6]))
        if g.average_degree() == 0:
            continue
        res = extract_expander(g, seed=i)
        h, params = res.subgraph, res.params
        assert params.delta == params.C * params.eps1 / math.log(3)
        assert h.average_degree() >= (1 - params.delta) * g.average_degree()
        assert min(h.degrees()) >= h.average_degree() / 2
        done += 1
    elapsed = time.time() - started
    assert done >= 95
    print(f"extraction corpus: {done}/100 graphs satisfy both degree bounds, {elapsed:.1f}s")


def _brute_verify(g, params):
    """Reference verdict: enumerate every candidate set and deletion set."""
    n, edges = g.n, list(g.edges)
    d = g.average_degree()
    for size in range(max(1, math.ceil(params.t / 2)), n // 2 + 1):
        required = rho(size, params) * size
        budget = math.floor(d * rho(size, params) * size)
        for xs in itertools.combinations(range(n), size):
            for k in range(budget + 1):
                for fs in itertools.combinations(edges, k):
                    dropped = set(fs)
                    seen = set()
                    for v in xs:
                        for u in g.adj[v]:
                            if u in xs or u in seen:
                                continue
                            if (min(u, v), max(u, v)) in dropped:
                                continue
                            seen.add(u)
                    if len(seen) < required:
                        return False
    return True


def test_verifier_agrees_with_brute_force_reference():
    started = time.time()
    rng = random.Random(3)
    corpus = [complete_graph(k) for k in range(4, 9)]
    corpus += [gen_grid([2, 2, 2]), gen_grid([2, 2, 2, 2])]
    for _ in range(6):
        corpus.append(_rand_graph(rng, rng.randint(6, 16), rng.choice([0.3, 0.5, 0.8])))
    psets = [ExpanderParams(0.01, 2), ExpanderParams(0.8, 2), ExpanderParams(2.0, 3)]
    checked = agreed = 0
    for g in corpus:
        if g.average_degree() == 0:
            continue
        for params in psets:
            cert = verify_robust_expander(g, params, mode="exhaustive")
            checked += 1
            if g.n <= 8:
                assert cert.holds == _brute_verify(g, params)
                agreed += 1
    elapsed = time.time() - started
    assert agreed >= 15
    assert elapsed < 600
    print(
        f"verification corpus: {checked} verdicts, {agreed} matched the "
        f"exhaustive reference, {elapsed:.1f}s < 600s"
    )


def test_partition_corpus_within_retry_budget():
    started = time.time()
    rng = random.Random(4)
    done = 0
    for i in range(50):
        d = rng.randint(20, 60)
        r = rng.choice([3, 5, 7])
        capacity = r * (d // r)  # pigeonhole ceiling across the r classes
        n_hi = min(int(0.9 * d), capacity - r)
        n = rng.randint(max(6, n_hi // 2), n_hi)
        b = max(1, int(0.1 * d))
        h = _banded_bipartite(rng, n, b)
        bw = BandwidthResult(tuple(range(n)), order_bandwidth(h, range(n)), False)
        assert bw.b <= b

        plan = partition_onto_odd_cycle(h, r, d, bw=bw, seed=i)
        assert plan.attempts <= 64
        assert validate_cycle_partition(h, plan.classes, r, d) == []

        a = max(2, r - 1)
        sun = Sun(tuple(range(2 * a)), ((2 * a, 1),))
        sp = partition_onto_sun(h, sun, r, d, bw=bw, seed=i)
        assert sp.attempts <= 64
        assert validate_sun_partition(h, sun, sp.cycle_classes, sp.leaf_classes, r, d) == []
        done += 1
    elapsed = time.time() - started
    assert done == 50
    print(f"partition corpus: {done}/50 cycle and sun plans validated, {elapsed:.1f}s")


def test_path_systems_obey_intersection_law_on_certified_hosts():
    started = time.time()
    rng = random.Random(5)
    hosts = [complete_graph(k) for k in range(6, 12)]
    while len(hosts) < 30:
        g = _rand_graph(rng, rng.randint(8, 14), rng.choice([0.5, 0.7, 0.9]))
        if g.average_degree() == 0:
            continue
        if verify_robust_expander(g, ExpanderParams(0.01, 2), mode="exhaustive").holds:
            hosts.append(g)
    violations = 0
    for i, g in enumerate(hosts):
        x = [i % g.n]
        r = min(3, g.n // 2)
        ps = consecutive_shortest_paths(g, x, r, q=3)
        rep = check_path_intersection_bound(g, x, [], ps, r)
        violations += len(rep.violations)
        assert rep.ok
    elapsed = time.time() - started
    assert violations == 0
    print(f"path-system corpus: {len(hosts)} certified hosts, {violations} violations, {elapsed:.1f}s")


def test_bipartite_hosts_admit_no_forbidden_pattern(tmp_path):
    started = time.time()
    k4 = tmp_path / "k4.txt"
    k4.write_text(format_graph_text(complete_graph(4)))
    for n in range(2, 7):
        host = gen_complete_bipartite(2, 2 + n)
        assert is_k4_minor_free(host)
        res = find_minor(host, complete_graph(4))
        assert res.outcome == "absent" and res.decided
        host_file = tmp_path / f"host{n}.txt"
        host_file.write_text(format_graph_text(host))
        assert cli_main(["oracle", "minor", str(host_file), str(k4)]) == 1

    pattern = gen_planar_with_k4s(8)
    for n in range(6, 9):
        res = find_minor(gen_complete_bipartite(5, 5 + n), pattern, budget=200_000_000)
        assert res.outcome == "absent" and res.decided
    elapsed = time.time() - started
    assert elapsed < 300
    print(f"absence corpus: K4 and 8-vertex pattern proven absent, {elapsed:.1f}s < 300s")


def test_embedding_pipeline_never_contradicts_oracle():
    started = time.time()
    rng = random.Random(7)
    patterns = [
        complete_graph(3),
        complete_graph(4),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        gen_grid([2, 3]),
        complete_graph(5),
        gen_complete_bipartite(2, 5),
    ]
    contradictions = embedded = absent = 0
    for i in range(100):
        g = _rand_graph(rng, rng.randint(6, 14), rng.choice([0.3, 0.5, 0.7]))
        h = patterns[i % len(patterns)]
        report = embed_subdivision(g, h, seed=i)
        oracle = find_subdivision(g, h, budget=2_000_000)
        if report.outcome == "embedded":
            embedded += 1
            if validate_subdivision(g, h, report.anchors, report.paths):
                contradictions += 1
        if oracle.outcome == "absent":
            absent += 1
            if report.outcome == "embedded":
                contradictions += 1
    elapsed = time.time() - started
    assert contradictions == 0
    assert embedded > 0 and absent > 0
    print(
        f"pipeline corpus: {embedded} embeddings, {absent} proven absences, "
        f"{contradictions} contradictions, {elapsed:.1f}s"
    )


def test_transform_round_trips_recover_every_pattern():
    started = time.time()
    rng = random.Random(8)
    done = 0
    for i in range(50):
        h = _rand_graph(rng, rng.randint(4, 10), rng.choice([0.3, 0.5, 0.8]))
        k = rng.randint(3, 5)
        sp = split_high_degree(h, k)
        assert sp.graph.max_degree() <= k
        assert sp.recover_edges() == set(h.edges)

        db = bipartite_double(h, two_color_classes(h))
        a = set(db.a_side)
        assert all((u in a) != (v in a) for u, v in db.graph.edges)
        assert db.recover_edges() == set(h.edges)
        # contracting the merge edges must leave a host for h itself
        merged = {v: u for u, v in db.links}
        label = lambda v: merged.get(v, v)
        edges = {
            (min(label(u), label(v)), max(label(u), label(v)))
            for u, v in db.graph.edges
            if label(u) != label(v)
        }
        if h.m() > 0:
            contracted = Graph(h.n, sorted(edges))
            assert find_minor(contracted, h, budget=5_000_000).found
        done += 1
    elapsed = time.time() - started
    assert done == 50
    print(f"transform corpus: {done}/50 round trips recovered, {elapsed:.1f}s")


def test_stats_invariants_and_bound_window_on_connected_corpus():
    started = time.time()
    rng = random.Random(9)
    corpus = [complete_graph(k) for k in range(2, 9)]
    corpus += [cycle_graph(k) for k in range(3, 9)]
    corpus += [path_graph(k) for k in range(2, 9)]
    corpus += [gen_grid([2, 2]), gen_grid([2, 3]), gen_grid([2, 4]),
               gen_complete_bipartite(2, 7), gen_complete_bipartite(3, 7),
               gen_planar_with_k4s(8)]
    while len(corpus) < 40:
        g = _rand_graph(rng, rng.randint(3, 8), 0.5)
        if g.is_connected():
            corpus.append(g)
    for f in corpus:
        s = graph_stats(f)
        assert s.exact
        assert 1 <= s.independence <= s.independence2 <= min(f.n, 2 * s.independence)
        assert s.chromatic * s.independence >= f.n
        assert (s.chromatic >= 2) == (f.m() > 0)
        b = minor_degree_bounds(f, s)
        assert b.lower <= b.upper
        assert b.witness_s == b.t - b.alpha - 1
    elapsed = time.time() - started
    print(f"stats corpus: {len(corpus)} connected patterns, windows consistent, {elapsed:.1f}s")
