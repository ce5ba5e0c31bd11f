import json

import pytest

from sgfp.cli import main


@pytest.fixture
def fig1_files(tmp_path):
    graph = tmp_path / "g.edges"
    attrs = tmp_path / "a.csv"
    rc = main(["gen", "fig1", "--output", str(graph),
               "--attrs-output", str(attrs)])
    assert rc == 0
    return graph, attrs


def test_analyze_fig1(fig1_files, tmp_path):
    graph, attrs = fig1_files
    out = tmp_path / "report.json"
    rc = main(["analyze", str(graph), str(attrs), "--rational",
               "--output", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["singular_gap"] == -1.125
    assert abs(report["r_da"] + 0.8005) < 1e-3


def test_analyze_per_node(fig1_files, capsys):
    graph, attrs = fig1_files
    rc = main(["analyze", str(graph), str(attrs), "--per-node"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["s"]) == 8
    assert len(report["delta"]) == 8


def test_analyze_degenerate_constant_attrs(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    graph.write_text("1 2\n2 3\n")
    attrs = tmp_path / "a.csv"
    attrs.write_text("node,value\n1,5\n2,5\n3,5\n")
    rc = main(["analyze", str(graph), str(attrs)])
    assert rc == 2


def test_classify_star(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    main(["gen", "star", "--n", "6", "--output", str(graph)])
    rc = main(["classify", str(graph)])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert result["kind"] == "ProSGFP"


def test_classify_regular_exits_2(tmp_path):
    graph = tmp_path / "g.edges"
    graph.write_text("1 2\n2 3\n3 1\n")
    assert main(["classify", str(graph)]) == 2


def test_parse_error_exits_1(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    graph.write_text("1 2 3 4\n")
    assert main(["classify", str(graph)]) == 1
    assert "error" in capsys.readouterr().err


def test_optimize_path5(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    main(["gen", "path", "--n", "5", "--output", str(graph)])
    rc = main(["optimize", str(graph), "--witness"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert result["r_high"] > 0
    assert len(result["witness"]) == 5


def test_optimize_regular_exits_2(tmp_path):
    graph = tmp_path / "g.edges"
    graph.write_text("1 2\n2 3\n3 1\n")
    assert main(["optimize", str(graph)]) == 2


def test_threshold_path5(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    main(["gen", "path", "--n", "5", "--output", str(graph)])
    rc = main(["threshold", str(graph), "--grid", "64"])
    assert rc == 0
    result = json.loads(capsys.readouterr().out)
    assert abs(result["candidate_sup"] - 0.40824829) < 1e-6


def test_census_small(tmp_path):
    out = tmp_path / "census.csv"
    rc = main(["census", "--nmin", "3", "--nmax", "4", "--samples", "20",
               "--seed", "1", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("n,samples,pro_count")
    assert len(lines) == 3
    assert lines[1].split(",")[:4] == ["3", "20", "20", "1.0"]


def test_grow(tmp_path):
    out = tmp_path / "grow.csv"
    rc = main(["grow", "3", "--output", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "k,n,gap,r"
    assert len(lines) == 5
    assert lines[1].split(",")[:2] == ["0", "8"]
    assert lines[4].split(",")[:2] == ["3", "20"]


def test_gen_fig4_attrs(tmp_path):
    graph = tmp_path / "g.edges"
    attrs = tmp_path / "a.csv"
    rc = main(["gen", "fig4", "--sample", "2", "--output", str(graph),
               "--attrs-output", str(attrs)])
    assert rc == 0
    rows = attrs.read_text().strip().splitlines()
    assert rows[0] == "node,value"
    assert [r.split(",")[1] for r in rows[1:]] == ["1", "1", "3", "0"]


def test_propown(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    graph.write_text("c l1\nc l2\nc l3\n")
    labels = tmp_path / "l.csv"
    labels.write_text("node,label\nc,M\nl1,M\nl2,M\nl3,F\n")
    rc = main(["propown", str(graph), str(labels)])
    assert rc == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[0] == "node,value"
    values = dict(r.split(",") for r in rows[1:])
    assert abs(float(values["c"]) - 2 / 3) < 1e-12
    assert values["l3"] == "0.0"


def test_rewire_experiment(tmp_path):
    graph = tmp_path / "g.edges"
    main(["gen", "gnp", "--n", "12", "--p", "0.4", "--seed", "3",
          "--output", str(graph)])
    out = tmp_path / "rewire.csv"
    rc = main(["rewire-experiment", str(graph), "--seed", "7",
               "--output", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("network_id,r_high_original")
    assert len(lines) == 2
