"""CLI commands, exit codes, report determinism."""

import json

from drgkit.cli import main


def run(argv):
    return main(argv)


def test_construct_chang(tmp_path):
    out = tmp_path / "c1.json"
    assert run(["construct", "--family", "chang", "--params", "1",
                "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["n"] == 28


def test_construct_icosahedron(tmp_path):
    out = tmp_path / "ico.json"
    assert run(["construct", "--family", "icosahedron", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 12


def test_construct_j84(tmp_path):
    out = tmp_path / "j84.json"
    assert run(["construct", "--family", "johnson", "--params", "8,4",
                "--out", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 70


def test_construct_bad_params(tmp_path):
    out = tmp_path / "x.json"
    assert run(["construct", "--family", "johnson", "--params", "2",
                "--out", str(out)]) == 1


def test_usage_error_exit_code():
    assert run(["analyze"]) == 1
    assert run(["nonsense"]) == 1


def test_analyze_shrikhande_all(tmp_path):
    g_path = tmp_path / "s.json"
    run(["construct", "--family", "shrikhande", "--out", str(g_path)])
    out = tmp_path / "report.json"
    assert run(["analyze", str(g_path), "--all-vertices", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert len(report["vertices"]) == 16
    assert all(rec["dim_T"] == 20 for rec in report["vertices"])
    assert all(rec["decomposition"]["wedderburn_dim"] == 20
               for rec in report["vertices"])
    assert report["graph"]["pvt"]["verdict"] == "pvt"


def test_analyze_chang_orbit_partition(tmp_path):
    g_path = tmp_path / "c1.json"
    run(["construct", "--family", "chang", "--params", "1", "--out", str(g_path)])
    out = tmp_path / "report.json"
    assert run(["analyze", str(g_path), "--all-vertices", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    dims = {}
    for rec in report["vertices"]:
        dims.setdefault(rec["dim_T"], 0)
        dims[rec["dim_T"]] += 1
    assert dims == {20: 4, 27: 24}


def test_analyze_deterministic(tmp_path):
    g_path = tmp_path / "g.json"
    run(["construct", "--family", "johnson", "--params", "8,2", "--out", str(g_path)])
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["analyze", str(g_path), "--out", str(a)]) == 0
    assert run(["analyze", str(g_path), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_analyze_j84_single_vertex(tmp_path):
    g_path = tmp_path / "j84.json"
    run(["construct", "--family", "johnson", "--params", "8,4", "--out", str(g_path)])
    out = tmp_path / "report.json"
    assert run(["analyze", str(g_path), "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    rec = report["vertices"][0]
    ell = sum(1 for c in rec["decomposition"]["classes"] if c["endpoint"] == 2)
    assert rec["dim_T"] == ell + 43 == 46
    assert report["graph"]["tightness"]["is_tight"]


def test_analyze_non_drg_fails(tmp_path):
    g_path = tmp_path / "p3.json"
    g_path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]}))
    assert run(["analyze", str(g_path)]) == 2


def test_analyze_float_fallback_flag(tmp_path):
    # 7-cycle: distance-regular, but eigenvalues need a cubic field
    g_path = tmp_path / "c7.json"
    g_path.write_text(json.dumps(
        {"n": 7, "edges": [[i, (i + 1) % 7] for i in range(6)] + [[0, 6]]}))
    assert run(["analyze", str(g_path)]) == 2
    out = tmp_path / "c7_report.json"
    assert run(["analyze", str(g_path), "--float-fallback", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert not report["graph"]["exact_spectrum"]
    assert any("float" in f for f in report["flags"])


def test_pvt_command(tmp_path, capsys):
    g_path = tmp_path / "s.json"
    run(["construct", "--family", "shrikhande", "--out", str(g_path)])
    assert run(["pvt", str(g_path)]) == 0
    assert "verdict: pvt" in capsys.readouterr().out


def test_tiso_command(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(["construct", "--family", "shrikhande", "--out", str(a)])
    run(["construct", "--family", "rook_grid", "--params", "4", "--out", str(b)])
    assert run(["tiso", str(a), str(b)]) == 0
    assert "T-isomorphic: False" in capsys.readouterr().out


def test_reproduce_exit_codes(capsys):
    assert run(["reproduce", "--table", "gq"]) == 0
    out = capsys.readouterr().out
    assert "all rows match" in out


def test_all_vertices_gate(tmp_path):
    g_path = tmp_path / "hc.json"
    run(["construct", "--family", "halved_cube", "--params", "8", "--out", str(g_path)])
    assert run(["analyze", str(g_path), "--all-vertices"]) == 1  # needs --slow
