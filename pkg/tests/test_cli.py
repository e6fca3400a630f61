import json

import pytest

from monodromy import known
from monodromy.cli import format_scan, main, run_scan
from monodromy.exact_linalg import Matrix
from monodromy.report import RunReport, closure_row, run_verify


@pytest.fixture(scope="module")
def report2():
    return run_verify(2, 3)


def test_verify_p2(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--p", "2", "--out", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["closure_dim"] == 10
    assert report["pf_degree"] == 4
    assert report["verdict"] == "equals_sp"
    assert report["word_cap"] == 3
    assert all(c["ok"] for c in report["checks"])
    assert "closure dim  : 10 / 10" in capsys.readouterr().out


def test_verify_p1(capsys):
    assert main(["verify", "--p", "1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert (report["closure_dim"], report["pf_degree"]) == (3, 2)


def test_verify_p0():
    assert main(["verify", "--p", "0"]) == 2


def test_usage_errors():
    assert main([]) == 2
    assert main(["show", "--p", "2", "bogus"]) == 2
    assert main(["scan", "--max-p", "0"]) == 2


def test_report_round_trip(report2):
    d = json.loads(report2.to_json())
    again = RunReport.from_dict(d)
    assert again == report2
    assert again.to_json() == report2.to_json()
    m = Matrix.from_json(d["matrices"]["model"]["m1"])
    assert m == known.M1_P2


def test_report_deterministic(report2, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--p", "2", "--out", str(a)]) == 0
    assert main(["verify", "--p", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text(encoding="utf-8") == report2.to_json()


def test_report_contents(report2):
    assert report2.roots is not None
    assert [r["name"] for r in report2.roots["roots"]][:2] == ["X12", "X21"]
    assert report2.polynomials["min_poly_m2"] == "λ^4 - 2*λ^2 + 1"
    assert report2.matrices["reduced"]["m2_red"] == known.M2_RED_P2.to_json()
    assert "log(M1)" in report2.seeds
    assert any("V1_0 = 0" in n for n in report2.notes)


def test_failure_exit_code(monkeypatch, capsys):
    import monodromy.report as report_mod
    monkeypatch.setattr(report_mod.known, "M1_P2", known.M1_P2 + Matrix.identity(6))
    assert main(["verify", "--p", "2"]) == 1
    err = capsys.readouterr().err
    assert "FAILED M1 (p=2)" in err


def test_show(capsys):
    assert main(["show", "--p", "2", "full", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert Matrix.from_json(d["M1"]) == known.M1_P2
    assert Matrix.from_json(d["M2"]) == known.M2_P2
    assert main(["show", "--p", "2", "omega", "--json"]) == 0
    assert Matrix.from_json(json.loads(capsys.readouterr().out)["omega"]) == known.OMEGA_P2
    assert main(["show", "--p", "3", "germ"]) == 0
    text = capsys.readouterr().out
    assert text.splitlines()[1:] == ["[0 0 1 0]", "[1 0 0 0]", "[0 1 0 0]", "[0 0 1 1]"]
    assert main(["show", "--p", "2", "reduced"]) == 0
    assert "M1_red" in capsys.readouterr().out


def test_closure_row():
    row = closure_row(1, 2)
    assert row["closure_dim"] == 3 and row["target"] == 3
    assert row["saturated"] and row["in_sp"]


def test_scan(tmp_path, capsys):
    out = tmp_path / "scan.json"
    assert main(["scan", "--max-p", "2", "--out", str(out)]) == 0
    rows = json.loads(out.read_text(encoding="utf-8"))["rows"]
    assert [(r["p"], r["closure_dim"], r["target"], r["verdict"]) for r in rows] == [
        (1, 3, 3, "equals_sp"), (2, 10, 10, "equals_sp")]
    assert "10/10" in capsys.readouterr().out


def test_scan_timeout():
    rows = run_scan(2, 3, timeout=0.0, jobs=1)
    assert [r["status"] for r in rows] == ["incomplete", "incomplete"]
    assert "incomplete" in format_scan(rows)
