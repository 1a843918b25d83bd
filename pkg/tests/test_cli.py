import csv
import io
import json
import subprocess
import sys

import pytest

from hls_lab.cli import CHECKS, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def reports(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_compute_latex():
    code, text = run("compute", "--series", "hls", "--n", "2", "--format", "latex")
    assert code == 0
    assert text.strip() == r"\dfrac{1 - Y X_{1|2}}{(1 - X_{1})(1 - X_{2})(1 - X_{12})}"


def test_compute_json_is_deterministic_and_seed_is_ignored():
    a = run("compute", "--series", "hls", "--n", "3")
    b = run("compute", "--series", "hls", "--n", "3", "--seed", "99")
    assert a == b and a[0] == 0
    data = json.loads(a[1])
    assert isinstance(data, dict)


@pytest.mark.parametrize("series", ["coarse", "affS_in", "affS_pr", "HS", "hecke", "quiver", "igusa", "symplectic", "weak-order"])
def test_compute_every_series(series):
    code, text = run("compute", "--series", series, "--n", "2", "--format", "text")
    assert code == 0 and text.strip()


def test_expand():
    code, text = run("expand", "--series", "hls", "--n", "1", "--bound", "3", "--format", "text")
    assert code == 0
    assert "X_{1}^3" in text


def test_verify_functional_equation():
    code, text = run("verify", "--check", "functional-equation", "--n", "3")
    assert code == 0
    (rep,) = reports(text)
    assert rep["check"] == "functional-equation" and rep["n"] == 3 and rep["status"] == "pass"
    assert isinstance(rep["millis"], int)


def test_verify_fnT_oracle():
    code, text = run("verify", "--check", "fnT", "--n", "2", "--p", "2", "--max-index-exp", "4")
    assert code == 0
    (rep,) = reports(text)
    assert rep["status"] == "pass" and rep["p"] == 2 and rep["max_index_exp"] == 4


def test_verify_failure_exit_code():
    code, text = run("verify", "--check", "golden-numerator", "--n", "3")
    assert code == 1
    assert reports(text)[0]["status"] == "fail"


def test_conjecture_checks_are_labelled():
    code, text = run("verify", "--check", "conjecture-depth", "--n", "4")
    assert code == 0
    assert reports(text)[0]["status"] == "conjecture-consistent"


def test_verify_list():
    code, text = run("verify", "--list")
    assert code == 0 and text.split() == list(CHECKS)


def test_verify_unknown_check_is_usage_error():
    assert run("verify", "--check", "nope")[0] == 2
    assert run("verify")[0] == 2


def test_budget_errors_exit_two():
    assert run("compute", "--series", "hls", "--n", "9")[0] == 2
    assert run("census", "--n", "2", "--p", "4", "--max-index-exp", "2")[0] == 2


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--series", "nope", "--n", "2"], out=io.StringIO())
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--series", "hls", "--n", "0"], out=io.StringIO())
    assert exc.value.code == 2


def test_census_csv():
    code, text = run("census", "--n", "2", "--p", "2", "--max-index-exp", "2", "--group-by", "all", "--out", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert set(rows[0]) == {"tableau-json", "delta", "type", "count"}
    assert sum(int(r["count"]) for r in rows) == 11


def test_census_json_lines_grouped_by_type():
    code, text = run("census", "--n", "2", "--p", "2", "--max-index-exp", "2", "--group-by", "type")
    assert code == 0
    *rows, summary = reports(text)
    assert {tuple(r["type"]): r["count"] for r in rows} == {(): 1, (1,): 3, (2,): 6, (1, 1): 1}
    assert summary == {"max_index_exp": 2, "n": 2, "p": 2, "total": 11}


@pytest.mark.parametrize("what", ["hasse", "chain-census", "tableaux", "numerator", "hecke", "h-vector"])
def test_export(what):
    code, text = run("export", "--what", what, "--n", "2")
    assert code == 0 and text.strip()


def test_export_hasse_is_dot():
    code, text = run("export", "--what", "hasse", "--n", "3")
    assert text.startswith("digraph")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hls_lab", "compute", "--series", "hls", "--n", "1", "--format", "text"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip()


def test_census_csv_respects_grouping():
    code, text = run("census", "--n", "2", "--p", "2", "--max-index-exp", "2", "--group-by", "type", "--out", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {r["type"]: int(r["count"]) for r in rows} == {"[]": 1, "[1]": 3, "[2]": 6, "[1, 1]": 1}
    assert all(r["tableau-json"] == "" and r["delta"] == "" for r in rows)
