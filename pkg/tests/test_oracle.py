"""Exact subdivision/minor oracles: witnesses validate, absences are proofs."""

import itertools
import random

from minorforge import (
    Graph,
    complete_graph,
    cycle_graph,
    find_minor,
    find_subdivision,
    gen_complete_bipartite,
    gen_planar_with_k4s,
    is_k4_minor_free,
    path_graph,
    validate_minor,
    validate_subdivision,
)


def _petersen():
    es = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
    es += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, es)


def _rand_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _branch_sets(res):
    return {int(k): vs for k, vs in res.witness["branch_sets"].items()}


def _anchors_and_paths(res):
    anchors = {int(k): v for k, v in res.witness["anchors"].items()}
    paths = {
        tuple(int(x) for x in key.split(",")): p
        for key, p in res.witness["paths"].items()
    }
    return anchors, paths


def _has_minor_by_labeling(host, pattern):
    """Reference decision: try every host-vertex -> block labeling."""
    k = pattern.n
    for lab in itertools.product(range(k + 1), repeat=host.n):
        blocks = [[v for v in range(host.n) if lab[v] == b] for b in range(k)]
        if any(not bs for bs in blocks):
            continue
        if any(not host.induced(bs).is_connected() for bs in blocks):
            continue
        if all(
            any(host.has_edge(a, b) for a in blocks[u] for b in blocks[v])
            for u, v in pattern.edges
        ):
            return True
    return False


def test_petersen_contains_k4_subdivision():
    res = find_subdivision(_petersen(), complete_graph(4))
    assert res.found and res.outcome == "found"
    anchors, paths = _anchors_and_paths(res)
    assert validate_subdivision(_petersen(), complete_graph(4), anchors, paths) == []


def test_subdivision_of_graph_in_itself():
    res = find_subdivision(cycle_graph(4), cycle_graph(4))
    assert res.found
    anchors, paths = _anchors_and_paths(res)
    assert sorted(anchors.values()) == [0, 1, 2, 3]
    assert all(len(p) == 2 for p in paths.values())


def test_subdivision_absent_when_degrees_fall_short():
    res = find_subdivision(complete_graph(4), complete_graph(5))
    assert res.outcome == "absent" and res.decided
    assert res.nodes_spent == 0  # rejected by the degree prefilter


def test_long_cycle_hosts_shorter_cycle_subdivision():
    res = find_subdivision(cycle_graph(9), cycle_graph(5))
    assert res.found
    anchors, paths = _anchors_and_paths(res)
    assert validate_subdivision(cycle_graph(9), cycle_graph(5), anchors, paths) == []


def test_subdivision_validator_rejects_shared_interior():
    host, pattern = complete_graph(4), path_graph(3)
    anchors = {0: 0, 1: 1, 2: 2}
    paths = {(0, 1): [0, 3, 1], (1, 2): [1, 3, 2]}
    bad = validate_subdivision(host, pattern, anchors, paths)
    assert any("interior" in v or "disjoint" in v for v in bad)


def test_subdivision_validator_rejects_broken_path():
    host, pattern = cycle_graph(5), path_graph(2)
    bad = validate_subdivision(host, pattern, {0: 0, 1: 2}, {(0, 1): [0, 2]})
    assert bad  # 0-2 is not an edge of the cycle


def test_bipartite_host_has_no_k4_minor():
    res = find_minor(gen_complete_bipartite(2, 7), complete_graph(4))
    assert res.outcome == "absent" and res.decided and not res.found


def test_k33_has_k4_minor():
    host = gen_complete_bipartite(3, 6)
    res = find_minor(host, complete_graph(4))
    assert res.found
    assert validate_minor(host, complete_graph(4), _branch_sets(res)) == []


def test_single_edge_pattern():
    res = find_minor(path_graph(2), path_graph(2))
    assert res.found
    assert sorted(len(bs) for bs in _branch_sets(res).values()) == [1, 1]


def test_petersen_has_k5_minor():
    host = _petersen()
    res = find_minor(host, complete_graph(5))
    assert res.found
    assert validate_minor(host, complete_graph(5), _branch_sets(res)) == []


def test_minor_validator_rejects_disconnected_block():
    bad = validate_minor(path_graph(4), path_graph(2), {0: [0, 2], 1: [3]})
    assert any("connected" in v for v in bad)


def test_minor_validator_rejects_missing_image_edge():
    bad = validate_minor(path_graph(4), path_graph(2), {0: [0], 1: [3]})
    assert any("edge" in v for v in bad)


def test_minor_validator_rejects_overlap():
    bad = validate_minor(complete_graph(4), path_graph(2), {0: [0, 1], 1: [1, 2]})
    assert any("overlap" in v or "disjoint" in v for v in bad)


def test_minor_oracle_agrees_with_labeling_reference():
    rng = random.Random(7)
    patterns = [
        complete_graph(3),
        complete_graph(4),
        cycle_graph(4),
        path_graph(3),
        Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ]
    for _ in range(20):
        n = rng.randint(4, 8)
        host = _rand_graph(rng, n, rng.choice([0.25, 0.4, 0.6]))
        pattern = rng.choice(patterns)
        got = find_minor(host, pattern, budget=5_000_000)
        assert got.decided
        assert got.found == _has_minor_by_labeling(host, pattern)
        if got.found:
            assert validate_minor(host, pattern, _branch_sets(got)) == []


def test_k4_freeness_by_reduction():
    assert is_k4_minor_free(gen_complete_bipartite(2, 9))
    assert is_k4_minor_free(cycle_graph(6))
    assert is_k4_minor_free(Graph(3, []))
    assert not is_k4_minor_free(complete_graph(4))
    assert not is_k4_minor_free(gen_planar_with_k4s(8))


def test_k4_freeness_agrees_with_search():
    rng = random.Random(19)
    for _ in range(20):
        g = _rand_graph(rng, rng.randint(4, 9), 0.35)
        res = find_minor(g, complete_graph(4))
        assert res.decided
        assert is_k4_minor_free(g) == (not res.found)


def test_exhausted_budget_is_inconclusive_not_absent():
    host = gen_complete_bipartite(5, 13)
    res = find_minor(host, gen_planar_with_k4s(8), budget=10)
    assert res.outcome == "timeout"
    assert not res.decided and not res.found
    assert res.nodes_spent <= 10 + 1
