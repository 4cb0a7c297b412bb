"""Command-line interface: exit codes, output formats, run manifest."""

import io
import json

import pytest

from minorforge import (
    Graph,
    complete_graph,
    cycle_graph,
    format_graph_text,
    gen_complete_bipartite,
    gen_planar_with_k4s,
    path_graph,
)
from minorforge.cli import main


@pytest.fixture
def write_graph(tmp_path):
    def _write(name, g):
        path = tmp_path / name
        path.write_text(format_graph_text(g))
        return str(path)

    return _write


def test_oracle_found_exits_zero(write_graph, capsys):
    host = write_graph("host.txt", gen_complete_bipartite(3, 6))
    pattern = write_graph("pat.txt", complete_graph(4))
    assert main(["oracle", "minor", host, pattern]) == 0
    assert "found" in capsys.readouterr().out


def test_oracle_absent_exits_one(write_graph, capsys):
    host = write_graph("host.txt", gen_complete_bipartite(2, 7))
    pattern = write_graph("pat.txt", complete_graph(4))
    assert main(["oracle", "minor", host, pattern]) == 1
    assert "absent" in capsys.readouterr().out


def test_oracle_budget_exhaustion_exits_two(write_graph, capsys):
    host = write_graph("host.txt", gen_complete_bipartite(5, 13))
    pattern = write_graph("pat.txt", gen_planar_with_k4s(8))
    assert main(["--budget", "10", "oracle", "minor", host, pattern]) == 2
    assert "timeout" in capsys.readouterr().out


def test_oracle_requires_pattern_argument(write_graph, capsys):
    host = write_graph("host.txt", cycle_graph(4))
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "minor", host])
    assert exc.value.code == 3


def test_unknown_flag_exits_three(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "grid", "--no-such-flag"])
    assert exc.value.code == 3


def test_malformed_input_exits_three(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3 1\nz 0 1\n")
    assert main(["stats", str(bad)]) == 3
    assert "line 2" in capsys.readouterr().out


def test_missing_file_exits_three(capsys):
    assert main(["stats", "/nonexistent/graph.txt"]) == 3


def test_verify_expander_failure_prints_violating_set(write_graph, capsys):
    g = write_graph("path.txt", path_graph(20))
    code = main(
        ["--exhaustive-cap", "20", "verify-expander", g, "--eps1", "2.0", "--t", "2"]
    )
    assert code == 1
    out = capsys.readouterr().out
    assert "violating set:" in out


def test_verify_expander_success(write_graph, capsys):
    g = write_graph("k6.txt", complete_graph(6))
    assert main(["verify-expander", g, "--eps1", "0.01", "--t", "2"]) == 0
    assert "holds" in capsys.readouterr().out


def test_partition_rejects_even_cycle_length(write_graph, capsys):
    g = write_graph("p4.txt", path_graph(4))
    assert main(["partition", "cycle", g, "--r", "4", "--d", "20"]) == 3


def test_partition_retry_exhaustion_exits_two(write_graph, capsys):
    g = write_graph("p10.txt", path_graph(10))
    code = main(["partition", "cycle", g, "--r", "3", "--d", "10", "--retries", "4"])
    assert code == 2


def test_partition_success_lists_classes(write_graph, capsys):
    g = write_graph("p9.txt", path_graph(9))
    assert main(["partition", "cycle", g, "--r", "3", "--d", "12"]) == 0
    assert "class" in capsys.readouterr().out


def test_separable_prints_separator(write_graph, capsys):
    g = write_graph("p9.txt", path_graph(9))
    assert main(["separable", g, "--alpha", "0.34"]) == 0
    out = capsys.readouterr().out
    assert "1" in out and "5" in out


def test_separable_clique_exits_one(write_graph):
    g = write_graph("k5.txt", complete_graph(5))
    assert main(["separable", g, "--alpha", "0.2"]) == 1


def test_json_manifest_shape(capsys):
    assert main(["--format", "json", "--seed", "5", "gen", "grid", "--dims", "2,2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "gen"
    assert doc["result"]["n"] == 4
    assert doc["manifest"]["seed"] == 5
    assert doc["manifest"]["exit"] == 0
    assert "elapsed_ms" in doc["manifest"]
    assert "--format" in doc["manifest"]["argv"]


def test_global_flags_accepted_after_subcommand(capsys):
    assert main(["gen", "grid", "--dims", "2,2", "--seed", "1"]) == 0
    text_after = capsys.readouterr().out
    assert main(["--seed", "1", "gen", "grid", "--dims", "2,2"]) == 0
    assert capsys.readouterr().out == text_after


def test_gen_output_is_parseable_graph_text(capsys):
    assert main(["gen", "planar-k4", "--t", "9"]) == 0
    out = capsys.readouterr().out
    assert "p 9 14" in out
    assert "e 3 8" in out and "e 4 8" in out


def test_planar_subdivide_tetrahedron(write_graph, capsys):
    g = write_graph("k4.txt", complete_graph(4))
    assert main(["--format", "json", "planar-subdivide", g]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["n"] == 6


def test_planar_subdivide_rejects_nonplanar(write_graph, capsys):
    g = write_graph("k5.txt", complete_graph(5))
    assert main(["planar-subdivide", g]) == 3


def test_one_sided_subdivide_rejects_dependent_anchors(write_graph):
    g = write_graph("k4.txt", complete_graph(4))
    assert main(["one-sided-subdivide", g, "--x", "0,1"]) == 3


def test_transform_split_star(write_graph, capsys):
    g = write_graph("star.txt", Graph(10, [(0, i) for i in range(1, 10)]))
    assert main(["transform", "split", g, "--k", "4"]) == 0
    out = capsys.readouterr().out
    assert "3" in out and "13" in out


def test_reads_graph_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(format_graph_text(cycle_graph(5))))
    assert main(["stats", "-"]) == 0
    assert "n=5" in capsys.readouterr().out.replace(" ", "")


def test_figure_is_rendered(write_graph, tmp_path, capsys):
    g = write_graph("c6.txt", cycle_graph(6))
    target = tmp_path / "out.png"
    assert main(["--figure", str(target), "stats", g]) == 0
    assert target.exists() and target.stat().st_size > 0


def test_dot_format_emits_graph(write_graph, capsys):
    g = write_graph("c4.txt", cycle_graph(4))
    assert main(["--format", "dot", "stats", g]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph") and "--" in out


def test_embed_exit_codes(write_graph):
    k5 = write_graph("k5.txt", complete_graph(5))
    c4 = write_graph("c4.txt", cycle_graph(4))
    p5 = write_graph("p5.txt", path_graph(5))
    k4 = write_graph("k4.txt", complete_graph(4))
    assert main(["embed", k5, c4]) == 0
    assert main(["embed", p5, k4]) == 1


def test_bandwidth_and_bounds_report(write_graph, capsys):
    g = write_graph("c8.txt", cycle_graph(8))
    assert main(["bandwidth", g]) == 0
    assert "bandwidth 2" in capsys.readouterr().out
    k5 = write_graph("k5.txt", complete_graph(5))
    assert main(["bounds", k5]) == 0
    out = capsys.readouterr().out
    assert "6" in out and "8" in out
