import json

import pytest

from critfilt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_critvals_report(capsys):
    code, rep, _ = run(capsys, "critvals", "--map", "(z^3+z^2)/(9*z+1)")
    assert code == 0
    assert rep["schema"] == 1 and rep["command"] == "critvals"
    cv = rep["results"]["critical_values"]
    assert cv["count"] == 3 and cv["infinity"]
    assert sorted(cv["finite"]) == ["-1/27", "0/1"]


def test_rationals_are_strings(capsys):
    _, rep, _ = run(capsys, "critvals", "--map", "(z^3+z^2)/(l*z+1)", "--param", "l=5")
    finite = rep["results"]["critical_values"]["finite"]
    assert finite[0] == "0/1"
    # a conjugate pair a + b sqrt(D) keeps a and b as strings
    assert all(isinstance(v["a"], str) and isinstance(v["b"], str) for v in finite[1:])


def test_syntax_error_exit_code(capsys):
    code, rep, err = run(capsys, "critvals", "--map", "(z^")
    assert code == 2 and rep is None
    assert "offset 3" in err


def test_missing_argument_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--degree", "3"])
    assert exc.value.code == 2


def test_classify_power_map(capsys):
    code, rep, _ = run(capsys, "classify", "--map", "z^5")
    assert code == 0
    assert rep["results"]["filtration_level"] == 2 and rep["results"]["belyi"]


def test_divisor_with_leading_minus(capsys):
    code, rep, _ = run(capsys, "divisor", "--func", "-s*(108*s^2-700*s+1125)^2/(50000*(s-3)^3)")
    assert code == 0
    assert rep["results"]


def test_enumerate_counts(capsys):
    code, rep, _ = run(capsys, "enumerate", "--branch", "3", "--degree", "3", "--counts-only")
    assert code == 0
    assert rep["results"]["count"] == 7
    assert rep["results"]["by_genus"] == {"0": 6, "1": 1}


def test_budget_exceeded_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("CRITFILT_BUDGET", "3")
    code, _, err = run(capsys, "enumerate", "--branch", "3", "--degree", "4")
    assert code == 2 and "BudgetExceeded" in err


def test_braid_orbits(capsys):
    code, rep, _ = run(capsys, "braid-orbits", "--degree", "3", "--passport", "2,1;2,1;2,1;2,1")
    assert code == 0 and rep["results"]["count"] >= 1


def test_dessin_writes_dot(capsys, tmp_path):
    target = tmp_path / "g1.dot"
    code, rep, _ = run(capsys, "dessin", "--degree", "3", "--genus", "1", "--index", "1", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("graph ")
    assert rep["results"]["euler"] == 0


def test_report_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, rep, _ = run(capsys, "classify", "--map", "z^2", "--out", str(target))
    assert code == 0 and json.loads(target.read_text()) == rep


def test_beta_bas_sekividu(capsys):
    code, rep, _ = run(capsys, "beta-bas", "--family", "sekividu", "--exact")
    assert code == 0
    exact = rep["results"]["exact"]
    assert exact["cross_ratio_matches_boxed"] and exact["j_matches_j_of_boxed"]


def strip_timing(obj):
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "elapsed_s"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def test_verify_paper_is_deterministic(capsys):
    first = run(capsys, "verify-paper", "--only", "1,2,5,8")
    second = run(capsys, "verify-paper", "--only", "1,2,5,8")
    assert first[0] == second[0] == 0
    assert strip_timing(first[1]) == strip_timing(second[1])


def test_verify_paper_failure_exit_code(capsys):
    code, rep, _ = run(capsys, "verify-paper", "--only", "4")
    assert code == 1 and rep["results"]["summary"]["failed"] == [4]


def test_symbolic_parameter(capsys):
    code, rep, _ = run(capsys, "critvals", "--map", "(z^3+z^2)/(l*z+1)", "--param", "l")
    assert code == 0
    assert rep["results"]["map"] == "(z^3 + z^2)/(l*z + 1)"
    assert rep["results"]["critical_values"]["count"] == 4
