"""Bandwidth orders, odd-cycle and sun partitions, separability probe."""

import random

import pytest

from minorforge import (
    Graph,
    PartitionError,
    Sun,
    bandwidth_order,
    check_separable,
    complete_graph,
    cycle_graph,
    order_bandwidth,
    partition_onto_odd_cycle,
    partition_onto_sun,
    path_graph,
    validate_cycle_partition,
    validate_sun_partition,
)


def _banded_bipartite(rng, n, b, p=0.7):
    """Bipartite by position parity, edges only within positional distance b."""
    edges = []
    for u in range(n):
        for v in range(u + 1, min(n, u + b + 1)):
            if (v - u) % 2 == 1 and rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def test_bandwidth_of_path_is_one():
    res = bandwidth_order(path_graph(9))
    assert res.b == 1 and res.exact
    assert order_bandwidth(path_graph(9), res.order) == 1


def test_bandwidth_of_cycle_is_two():
    res = bandwidth_order(cycle_graph(8))
    assert res.b == 2 and res.exact


def test_bandwidth_of_small_star():
    res = bandwidth_order(Graph(5, [(0, i) for i in range(1, 5)]))
    assert res.b == 2 and res.exact  # centre in the middle, two leaves a side


def test_order_bandwidth_scores_any_order():
    assert order_bandwidth(path_graph(9), range(9)) == 1
    assert order_bandwidth(path_graph(9), range(8, -1, -1)) == 1
    assert order_bandwidth(cycle_graph(4), [0, 2, 1, 3]) == 3


def test_heuristic_bandwidth_on_larger_path():
    res = bandwidth_order(path_graph(40))
    assert not res.exact
    assert order_bandwidth(path_graph(40), res.order) == res.b
    assert res.b >= 1


def test_cycle_partition_of_path_nine():
    plan = partition_onto_odd_cycle(path_graph(9), 3, 12)
    assert plan.classes == [[8], [0, 2, 4, 6], [1, 3, 5, 7]]
    assert plan.cap == 4
    assert validate_cycle_partition(path_graph(9), plan.classes, 3, 12) == []


def test_cycle_partition_single_edge_lands_on_adjacent_classes():
    plan = partition_onto_odd_cycle(path_graph(2), 3, 30)
    occupied = [i for i, cls in enumerate(plan.classes) if cls]
    assert occupied == [1, 2]
    assert validate_cycle_partition(path_graph(2), plan.classes, 3, 30) == []


def test_cycle_partition_rejects_even_length():
    with pytest.raises(PartitionError, match="odd"):
        partition_onto_odd_cycle(path_graph(4), 4, 20)


def test_cycle_partition_near_miss_is_reported():
    g = path_graph(10)
    with pytest.raises(PartitionError) as err:
        partition_onto_odd_cycle(g, 3, 10, retries=4)
    assert "exhausted" in str(err.value)
    assert err.value.near_miss == 1


def test_cycle_partition_caps_class_sizes():
    rng = random.Random(47)
    for r in (3, 5, 7):
        d = 30
        h = _banded_bipartite(rng, 18, 3)
        plan = partition_onto_odd_cycle(h, r, d)
        assert validate_cycle_partition(h, plan.classes, r, d) == []
        assert max(len(c) for c in plan.classes) <= plan.cap
        assert plan.w_mass <= plan.w_mass_bound
        assert plan.r == r and plan.d == d


def test_cycle_partition_is_deterministic_per_seed():
    h = _banded_bipartite(random.Random(1), 16, 3)
    a = partition_onto_odd_cycle(h, 5, 25, seed=7)
    b = partition_onto_odd_cycle(h, 5, 25, seed=7)
    assert a.classes == b.classes and a.seed_used == b.seed_used


def test_sun_partition_of_small_star():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    sun = Sun(cycle=tuple(range(100, 108)), leaves=((108, 1),))
    plan = partition_onto_sun(g, sun, 3, 16)
    assert plan.cap == 5
    assert plan.cycle_classes == [[], [], [1, 2, 3], [0], [], [], [], []]
    assert plan.leaf_classes == [[]]
    assert validate_sun_partition(g, sun, plan.cycle_classes, plan.leaf_classes, 3, 16) == []


def test_sun_partition_rejects_thin_sun():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    sun = Sun(cycle=(100, 101, 102, 103), leaves=((104, 1), (105, 3), (106, 1)))
    with pytest.raises(PartitionError, match="shape"):
        partition_onto_sun(g, sun, 3, 16)


def test_sun_partition_on_banded_corpus():
    rng = random.Random(53)
    sun = Sun(cycle=tuple(range(100, 110)), leaves=((110, 1), (111, 3)))
    for _ in range(4):
        h = _banded_bipartite(rng, 14, 3)
        plan = partition_onto_sun(h, sun, 3, 24, seed=2)
        assert validate_sun_partition(h, sun, plan.cycle_classes, plan.leaf_classes, 3, 24) == []
        assert plan.w_mass <= plan.w_mass_bound


def test_separability_of_path_nine():
    res = check_separable(path_graph(9), 1.0 / 3.0)
    assert res.found and res.exact
    assert res.separator == [1, 5]
    rest = path_graph(9).without_vertices(res.separator)
    assert all(len(c) <= 3 for c in rest.components())


def test_separability_fails_on_clique():
    res = check_separable(complete_graph(5), 0.2)
    assert not res.found and res.exact
    assert res.separator is None


def test_alpha_one_needs_no_separator():
    res = check_separable(complete_graph(5), 1.0)
    assert res.found and res.separator == []


def test_separability_rejects_bad_alpha():
    with pytest.raises(ValueError):
        check_separable(path_graph(9), 0.0)


def test_separability_heuristic_on_long_path():
    g = path_graph(20)
    res = check_separable(g, 0.3, exact_cap=14)
    assert not res.exact
    if res.found:
        cap = int(0.3 * 20)
        assert len(res.separator) <= cap
        rest = g.without_vertices(res.separator)
        assert all(len(c) <= cap for c in rest.components())
