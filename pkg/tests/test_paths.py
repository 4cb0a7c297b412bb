"""Connectors, consecutive path systems, growth profiles, intersection law."""

import math
import random

import pytest

from minorforge import (
    ExpanderParams,
    ExpansionCertificate,
    Graph,
    PathBoundError,
    check_path_intersection_bound,
    complete_graph,
    connect_avoiding,
    consecutive_shortest_paths,
    cycle_graph,
    growth_profile,
    path_graph,
    short_path_length_bound,
    verify_robust_expander,
)


def _rand_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _shortest_by_enumeration(g, start, goal, banned):
    """Exhaustive simple-path search, for cross-checking BFS answers."""
    best = None
    stack = [(start, {start})]
    while stack:
        v, seen = stack.pop()
        if v == goal:
            best = len(seen) - 1 if best is None else min(best, len(seen) - 1)
            continue
        for u in g.adj[v]:
            if u not in seen and u not in banned:
                stack.append((u, seen | {u}))
    return best


def _forged_certificate(g, eps1, t):
    # a fabricated exhaustive pass; the connector must catch the lie
    return ExpansionCertificate(
        params=ExpanderParams(eps1, t),
        n=g.n,
        mode="exhaustive",
        holds=True,
        sets_checked=0,
    )


def test_connect_overlapping_sets_needs_no_edge():
    assert connect_avoiding(complete_graph(4), [0, 1], [1, 2]) == [1]


def test_connect_adjacent_sets():
    assert connect_avoiding(complete_graph(6), [0], [5]) == [0, 5]


def test_connect_detours_around_avoided_vertex():
    assert connect_avoiding(cycle_graph(10), [0], [5], [1]) == [0, 9, 8, 7, 6, 5]


def test_connect_separated_sets_gives_none():
    assert connect_avoiding(path_graph(5), [0], [4], [2]) is None


def test_connect_ignores_sources_inside_avoid():
    assert connect_avoiding(path_graph(3), [0], [2], [0]) is None


def test_connect_is_shortest():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(4, 9)
        g = _rand_graph(rng, n, 0.4)
        banned = {v for v in range(1, n - 1) if rng.random() < 0.2}
        got = connect_avoiding(g, [0], [n - 1], banned)
        best = _shortest_by_enumeration(g, 0, n - 1, banned)
        if best is None:
            assert got is None
        else:
            assert got is not None and len(got) - 1 == best


def test_length_bound_formula():
    p = ExpanderParams(0.1, 2.0)
    expected = (2.0 / 0.1) * math.log(15.0 * 20.0 / 2.0) ** 3
    assert short_path_length_bound(20, p) == pytest.approx(expected)


def test_connect_accepts_honest_certificate():
    g = complete_graph(6)
    cert = verify_robust_expander(g, ExpanderParams(0.01, 2.0))
    assert cert.holds and cert.mode == "exhaustive"
    assert connect_avoiding(g, [0], [5], [], certificate=cert) == [0, 5]


def test_connect_catches_forged_length_guarantee():
    g = path_graph(30)
    cert = _forged_certificate(g, eps1=20.0, t=4.0)
    assert len(connect_avoiding(g, [0, 1], [28, 29])) - 1 > short_path_length_bound(30, cert.params)
    with pytest.raises(PathBoundError, match="exceeds"):
        connect_avoiding(g, [0, 1], [28, 29], certificate=cert)


def test_connect_catches_forged_connectivity_guarantee():
    g = path_graph(30)
    cert = _forged_certificate(g, eps1=20.0, t=4.0)
    with pytest.raises(PathBoundError, match="separated"):
        connect_avoiding(g, range(10), range(20, 30), [15], certificate=cert)


def test_consecutive_zero_requests():
    assert consecutive_shortest_paths(cycle_graph(8), [0], 3, q=0) == []


def test_consecutive_star_uses_distinct_leaves():
    g = Graph(6, [(0, i) for i in range(1, 6)])
    ps = consecutive_shortest_paths(g, [0], 1, q=3)
    assert [len(p) for p in ps] == [2, 2, 2]
    assert len({p[1] for p in ps}) == 3


def test_consecutive_cycle_exhausts_after_two():
    ps = consecutive_shortest_paths(cycle_graph(8), [0], 3, q=3)
    assert ps == [[0, 1], [0, 7]]


def test_consecutive_paths_start_inside_source():
    rng = random.Random(5)
    for _ in range(10):
        g = _rand_graph(rng, 9, 0.5)
        ps = consecutive_shortest_paths(g, [0, 1], 2, q=2)
        interiors = set()
        for p in ps:
            assert p[0] in (0, 1)
            assert not (set(p[1:]) & interiors)  # internally disjoint
            interiors |= set(p[1:])


def test_growth_radius_zero_counts_sources():
    rep = growth_profile(cycle_graph(8), [0, 3], [], [], 0)
    assert rep.sizes == [2]


def test_growth_without_obstacles_is_ball_sizes():
    g = cycle_graph(8)
    rep = growth_profile(g, [0], [], [], 3)
    assert rep.sizes == [len(g.ball([0], i)) for i in range(4)]


def test_growth_stalls_behind_path_screen():
    rep = growth_profile(cycle_graph(8), [0], [], [[0, 1], [0, 7]], 3)
    assert rep.sizes == [1, 1, 1, 1]
    assert rep.exponential_flags == [True, False, False, False]


def test_growth_sizes_never_decrease():
    rng = random.Random(29)
    for _ in range(10):
        g = _rand_graph(rng, 10, 0.4)
        rep = growth_profile(g, [0], [9], [], 4)
        assert rep.sizes == sorted(rep.sizes)


def test_intersection_law_on_verified_hosts():
    rng = random.Random(31)
    done = 0
    while done < 12:
        g = _rand_graph(rng, rng.randint(8, 12), 0.7)
        if g.average_degree() == 0 or not g.is_connected():
            continue
        if not verify_robust_expander(g, ExpanderParams(0.01, 2.0)).holds:
            continue
        ps = consecutive_shortest_paths(g, [0], 3, q=3)
        rep = check_path_intersection_bound(g, [0], [], ps, 3)
        assert rep.ok and rep.violations == []
        done += 1


def test_intersection_law_rejects_snake_path():
    # one path swallowing all of K6 meets the first front in 5 > 0 + 2 places
    rep = check_path_intersection_bound(complete_graph(6), [0], [], [[0, 1, 2, 3, 4, 5]], 2)
    assert not rep.ok
    assert (0, 0) in rep.violations
    assert rep.counts[0][0] == 5


def test_intersection_report_empty_system():
    rep = check_path_intersection_bound(cycle_graph(6), [0], [], [], 2)
    assert rep.ok and rep.counts == [[], [], []]
