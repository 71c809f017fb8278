import json

import pytest

from nument import cli
from nument.cubic import CubicField, classify_prime
from nument.cyclotomic import splitting_type
from nument.entropy import integer_divergence, integer_entropy
from nument.ideals import IdealFactorization, ideal_divergence, ideal_entropy
from nument.search import grid_csv, min_r_negative, scan_system


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_entropy_example(capsys):
    assert run_json(capsys, "entropy", "30") == {
        "n": 30, "omega": 3, "big_omega": 3, "entropy": 1.0986122886681098}


def test_entropy_matches_library(capsys):
    assert run_json(capsys, "entropy", "720720")["entropy"] == integer_entropy(720720)
    assert run_json(capsys, "divergence", "12", "18")["divergence"] == integer_divergence(12, 18)


def test_divergence_mismatch(capsys):
    code, out, err = run(capsys, "divergence", "12", "30")
    assert code == 1 and out == ""
    assert "omega-mismatch" in err


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["cyclo", "split", "--p", "2"])
    assert exc.value.code == 1


def test_cyclo_split(capsys):
    assert run_json(capsys, "cyclo", "split", "--p", "2", "--n", "5") == {"e": 1, "f": 4, "g": 1, "phi": 4}
    assert run_json(capsys, "cyclo", "split", "--p", "7", "--n", "45") == splitting_type(7, 45).as_dict()


def test_cyclo_ideal(capsys):
    got = run_json(capsys, "cyclo", "ideal", "--conductor", "5", "--rational", "2:1", "--lambda", "4")
    assert got["ideal"] == ["(2)^1", "(1-xi)^4"]
    assert got["entropy"] == ideal_entropy(IdealFactorization.parse("(2)^1 (1-xi)^4"))


def test_ideal_commands(capsys):
    assert run_json(capsys, "ideal", "entropy", "--exponents", "1,4")["entropy"] == ideal_entropy(
        IdealFactorization.parse("1,4"))
    got = run_json(capsys, "ideal", "divergence", "--left", "1,4", "--right", "2,3")
    assert got["divergence"] == ideal_divergence(IdealFactorization.parse("1,4"), IdealFactorization.parse("2,3"))


def test_cubic_classify(capsys):
    got = run_json(capsys, "cubic", "classify", "--a", "10", "--b", "25", "--p", "5")
    assert got["condition"] == classify_prime(CubicField(10, 25), 5).triggered_condition.value
    assert got["oracle_verdict"] == "abstain"
    got = run_json(capsys, "cubic", "classify", "--a", "1", "--b", "1", "--p", "7", "--oracle-only")
    assert got["oracle_verdict"] == "P1.P2[f2]" and "condition" not in got


def test_cubic_classify_reducible(capsys):
    code, _, err = run(capsys, "cubic", "classify", "--a", "2", "--b", "1", "--p", "5")
    assert code == 1 and "reducible-cubic" in err
    got = run_json(capsys, "cubic", "classify", "--a", "2", "--b", "1", "--p", "5", "--allow-reducible")
    assert got["condition"] == "CondII"


def test_cubic_cross_check(capsys):
    got = run_json(capsys, "cubic", "cross-check", "--a-range", "1:2", "--b-range", "1:3",
                   "--p-max", "13", "--summary-only")
    assert "records" not in got and got["summary"]["records"] > 0


def test_scans(capsys):
    got = run_json(capsys, "scan", "system", "--bound", "10", "--allow-negative")
    assert got == [list(s.as_tuple()) for s in scan_system(10, True)] == [[1, 2, 4, -1], [2, 4, 8, -2]]
    assert run_json(capsys, "scan", "thresholds", "--s-max", "4") == [[s, min_r_negative(s)] for s in range(1, 5)]
    assert run_json(capsys, "scan", "divergence", "--budget", "3") == [[1, 1, 1, 1], [1, 2, 1, 2], [2, 1, 2, 1]]


def test_grid(capsys, tmp_path):
    code, out, _ = run(capsys, "grid", "--s-max", "2", "--r-max", "3")
    assert code == 0 and out == grid_csv(2, 3)
    target = tmp_path / "g.csv"
    assert run_json(capsys, "grid", "--s-max", "2", "--r-max", "3", "--out", str(target))["rows"] == 12
    assert target.read_text() == grid_csv(2, 3)


def test_verify_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "--criteria", "1", "2", "7", "--out", str(a))[0] == 0
    _, _, err = run(capsys, "verify", "--criteria", "1", "2", "7", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert "criterion 2 (threshold table): pass" in err


def test_verify_failure_exit_two(capsys, monkeypatch):
    from nument import verify

    def broken(report):
        report.add("c2.forced", False, 0, 1)

    monkeypatch.setitem(verify.CRITERIA, 2, ("threshold table", broken))
    code, _, err = run(capsys, "verify", "--criteria", "2")
    assert code == 2 and "FAIL" in err
