import json
import subprocess
import sys

import numpy as np
import pytest

from threshold_spectra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_csv(capsys):
    code, out, _ = run(capsys, "construct", "0^2 1^3 0^2 1^2", "--lambda", "1", "--format", "csv")
    assert code == 0
    rows = [r.split(",") for r in out.strip().split("\n")]
    assert len(rows) == 9 and all(len(r) == 9 for r in rows)


def test_construct_single_vertex(capsys):
    code, out, _ = run(capsys, "construct", "0", "--format", "csv")
    assert code == 0 and out == "0\n"


def test_construct_k2_json(capsys):
    code, out, _ = run(capsys, "construct", "01", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"] == {"n": 2, "rows": [[0.0, 1.0], [1.0, 0.0]]}
    assert doc["weights"]["eps_cross"][0]["radical"] == 1


def test_construct_pretty(capsys):
    code, out, _ = run(capsys, "construct", "0^2 1")
    assert code == 0 and "eps[1,2]" in out


def test_construct_writes_files(capsys, tmp_path):
    target = tmp_path / "m.csv"
    code, out, _ = run(capsys, "construct", "0 1 0 1", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    m = np.loadtxt(target, delimiter=",")
    assert m.shape == (4, 4)
    weights = json.loads((tmp_path / "m.csv.weights.json").read_text())
    assert set(weights) == {"p", "eps_internal", "eps_cross"}
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".")]


def test_reduce_all_ones(capsys):
    code, out, _ = run(capsys, "reduce", "0 1 0 1 0 1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["chain_text"] == ["-λ", "λ", "2λ", "0", "-λ"]
    assert doc["final_singleton"] == {"a_num": 1, "a_den": 1, "b_num": 0, "b_den": 1}
    assert doc["spectrum"] == {"-1": 2, "0": 1, "1": 2, "2": 1}


def test_reduce_split_tokens(capsys):
    assert run(capsys, "reduce", "0", "1", "0", "1", "0", "1", "--format", "json")[1] == run(
        capsys, "reduce", "010101", "--format", "json"
    )[1]


def test_reduce_single_vertex(capsys):
    doc = json.loads(run(capsys, "reduce", "0", "--format", "json")[1])
    assert doc["chain_values"] == []
    assert doc["spectrum"] == {"-1": 0, "0": 1, "1": 0, "2": 0}


def test_reduce_nine_vertex_pretty(capsys):
    code, out, _ = run(capsys, "reduce", "0^2 1^3 0^2 1^2")
    assert code == 0
    assert "2 x 0, 3 x λ" in out
    assert "chain: [-λ, λ, 2λ]" in out
    assert "final singleton: 0" in out


def test_verify_tightness(capsys):
    code, out, _ = run(capsys, "verify", "0^3 1 0^2 1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["distinct_count"] == 4 and doc["pattern_ok"] and doc["spectrum_ok"]
    assert list(doc) == [
        "n", "r", "sequence", "lambda", "pattern_ok", "spectrum_ok",
        "distinct_count", "residual_max", "predicted_multiplicities", "numeric_eigenvalues",
    ]


def test_verify_negative_lambda(capsys):
    assert run(capsys, "verify", "0^2 1^3 0^2 1^2", "--lambda", "-2.5")[0] == 0


def test_verify_single_vertex(capsys):
    code, out, _ = run(capsys, "verify", "0", "--format", "json")
    assert code == 0 and json.loads(out)["distinct_count"] == 1


def test_verify_failure_exit_code(capsys):
    # a tolerance this tight cannot be met by any floating point result
    code, _, _ = run(capsys, "verify", "0 1 0 1 0 1", "--lambda", "0.37", "--tol", "1e-30")
    assert code == 5


def test_json_is_byte_identical(capsys):
    args = ("verify", "0^2 1^3 0^2 1^2", "--lambda", "0.37", "--format", "json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


@pytest.mark.parametrize("n_max, rows", [(1, 1), (4, 15)])
def test_sweep_small(capsys, n_max, rows):
    code, out, _ = run(capsys, "sweep", "--nmax", str(n_max), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["rows"]) == rows == doc["summary"]["sequences"]
    assert doc["summary"]["failures"] == 0
    assert doc["summary"]["max_distinct_count"] <= 4
    if n_max == 1:
        assert doc["rows"][0]["distinct_count"] == 1


def test_sweep_seven_contains_tightness_instance(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "7", "--format", "json")
    rows = {r["sequence"]: r for r in json.loads(out)["rows"]}
    assert code == 0
    assert rows["0^3 1^1 0^2 1^1"]["distinct_count"] == 4


def test_sweep_pretty_and_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "3")
    assert code == 0 and "summary: 7 sequences" in out
    code, out, _ = run(capsys, "sweep", "--nmax", "3", "--format", "csv")
    assert out.count("\n") == 8


def test_union_two_k2(capsys):
    code, out, _ = run(capsys, "union", "01", "01", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["report"]["distinct_count"] == 2
    assert doc["report"]["predicted_multiplicities"] == {"-1": 2, "0": 0, "1": 2, "2": 0}
    assert doc["matrix"]["n"] == 4


def test_union_single(capsys):
    code, out, _ = run(capsys, "union", "0", "--format", "json")
    assert code == 0 and json.loads(out)["report"]["n"] == 1


def test_union_mixed(capsys):
    code, out, _ = run(capsys, "union", "0^2 1^3 0^2 1^2", "0^3 1 0^2 1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"]["n"] == 16
    assert doc["report"]["distinct_count"] <= 4


@pytest.mark.parametrize(
    "argv, code",
    [
        (["verify", "10"], 2),
        (["verify", "0^x"], 2),
        (["verify"], 2),
        (["sweep"], 2),
        (["sweep", "--nmax", "0"], 2),
        (["verify", "01", "--lambda", "0"], 3),
        (["construct", "01", "--lambda", "nan"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "0"])
    assert info.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "threshold_spectra", "verify", "0 1", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["spectrum_ok"]


def test_hypothesis_violation_exit_code(capsys, monkeypatch):
    from threshold_spectra import cli
    from threshold_spectra.errors import HypothesisViolation
    from threshold_spectra.exact_scalar import LAMBDA, ZERO

    def broken(seq):
        raise HypothesisViolation("p[1] == p[2]", ZERO, LAMBDA)

    monkeypatch.setattr(cli, "run_full_reduction", broken)
    code, _, err = run(capsys, "reduce", "01")
    assert code == 4 and "p[1] == p[2]" in err
