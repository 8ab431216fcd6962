from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import pytest

from qsobolev import QContext, HermiteFamily, Scalar, SobolevFamily, SobolevParams
from qsobolev.algebra import poly_from_strings
from qsobolev.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hermite_json_round_trip(capsys, fam_half):
    code, out, _ = run_cli(capsys, "hermite", "--q", "1/2", "--n-max", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == "1/2"
    for row in payload["rows"]:
        rebuilt = poly_from_strings(row["coeffs"])
        assert rebuilt == fam_half.hermite(row["n"])
        assert Fraction(row["nu"]) == fam_half.norm_sq_normalized(row["n"]).as_fraction()


def test_hermite_csv_round_trip(capsys, fam_half):
    code, out, _ = run_cli(
        capsys, "hermite", "--q", "1/2", "--n-max", "4", "--output", "csv"
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    for row in rows:
        n = int(row["n"])
        coeffs = [row[f"c{k}"] for k in range(n + 1)]
        assert poly_from_strings(coeffs) == fam_half.hermite(n)
    assert rows[2]["c0"] == "-1/2" and rows[2]["c2"] == "1"
    assert rows[0]["gamma"] == ""


def test_hermite_n0_single_row(capsys):
    code, out, _ = run_cli(capsys, "hermite", "--q", "1/2", "--n-max", "0")
    payload = json.loads(out)
    assert code == 0
    assert payload["rows"] == [{"n": 0, "coeffs": ["1"], "gamma": None, "nu": "1"}]


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "sobolev", "--q", "1/2", "--alpha", "2",
                          "--effective-mass", "1", "--n-max", "5", "--seed", "3")
    _, second, _ = run_cli(capsys, "sobolev", "--q", "1/2", "--alpha", "2",
                           "--effective-mass", "1", "--n-max", "5", "--seed", "3")
    assert first == second


def test_sobolev_output_matches_family(capsys, sfam_half):
    code, out, _ = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "2", "--effective-mass", "1",
        "--n-max", "2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["S"][2] == ["-1/2", "-2", "1"]
    assert payload["dq_at_alpha"] == ["0", "1", "1"]
    assert payload["mass_convention"] == "effective"


def test_sobolev_large_mass_saturates(capsys):
    code, out, _ = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "2",
        "--effective-mass", "1000000", "--n-max", "2",
    )
    assert code == 0
    coeff = Fraction(json.loads(out)["S"][2][1])
    assert abs(coeff - (-3)) <= Fraction(3, 10**5)


def test_sobolev_connection_payload(capsys, sfam_half):
    code, out, _ = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "2", "--effective-mass", "1",
        "--n-max", "3", "--connection",
    )
    assert code == 0
    payload = json.loads(out)
    cc = sfam_half.connection_coeffs(3)
    got_e1 = payload["connection"]["3"]["E1"]
    assert poly_from_strings(got_e1["num"]) == cc.E1.num
    assert poly_from_strings(got_e1["den"]) == cc.E1.den


def test_connection_requires_json(capsys):
    code, _, err = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "2", "--effective-mass", "1",
        "--output", "csv", "--connection",
    )
    assert code == 2
    assert "JSON" in err


def test_eval_examples(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "S", "2", "--at", "2",
        "--q", "1/2", "--alpha", "2", "--effective-mass", "1",
    )
    assert (code, out.strip()) == (0, "-1/2")
    code, out, _ = run_cli(capsys, "eval", "H", "1", "--at", "0", "--q", "1/2")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = run_cli(
        capsys, "eval", "DqS", "2", "--at", "2",
        "--q", "1/2", "--alpha", "2", "--effective-mass", "1",
    )
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run_cli(
        capsys, "eval", "kernel", "2", "--at", "0", "--y", "0", "--q", "1/2",
    )
    assert code == 0
    fam = HermiteFamily(QContext.exact(Fraction(1, 2)), 3)
    assert Fraction(out.strip()) == fam.kernel_poly(2, 0, 0, 0)(Scalar.exact(0)).as_fraction()


def test_invalid_q_exits_2(capsys):
    for bad_q in ("3/2", "0", "1", "banana"):
        code, _, err = run_cli(capsys, "hermite", "--q", bad_q)
        assert code == 2, bad_q
        assert "error:" in err


def test_invalid_alpha_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "1/2", "--effective-mass", "1"
    )
    assert code == 2
    assert "outside" in err


def test_raw_mass_in_exact_mode_exits_2(capsys):
    code, _, err = run_cli(capsys, "sobolev", "--q", "1/2", "--alpha", "2", "--mass", "1")
    assert code == 2
    assert "effective" in err


def test_both_mass_flags_exit_2(capsys):
    code, _, _ = run_cli(
        capsys, "sobolev", "--q", "1/2", "--alpha", "2",
        "--mass", "1", "--effective-mass", "1",
    )
    assert code == 2


def test_config_file_with_flag_override(capsys, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# sample configuration\n"
        "q = 1/2\n"
        "alpha = 2\n"
        "mass = 1\n"
        "mass_convention = effective\n"
        "n_max = 2\n",
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "sobolev", "--config", str(config))
    assert code == 0
    assert json.loads(out)["S"][2] == ["-1/2", "-2", "1"]
    # flag overrides the file
    code, out, _ = run_cli(capsys, "sobolev", "--config", str(config), "--alpha", "-3")
    assert code == 0
    assert json.loads(out)["alpha"] == "-3"


def test_config_file_unknown_key_exits_2(capsys, tmp_path):
    config = tmp_path / "bad.cfg"
    config.write_text("qq = 1/2\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "hermite", "--config", str(config))
    assert code == 2
    assert "qq" in err


def test_verify_small_grid_passes(capsys):
    code, out, err = run_cli(
        capsys, "verify", "ladder",
        "--q", "1/2", "--alpha", "2", "--effective-mass", "1", "--n-max", "3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] > 0
    assert "passed" in err


def test_verify_mutation_canary_exits_1(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "ladder", "--mutate-e4",
        "--q", "1/2", "--alpha", "2", "--effective-mass", "1", "--n-max", "2",
    )
    assert code == 1
    payload = json.loads(out)
    failing = [c for c in payload["cases"] if c["status"] == "fail"]
    assert failing and all("residual numerator" in c["witness"] for c in failing)


def test_verify_unknown_suite_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "nonsense")
    assert code == 2
    assert "unknown suites" in err


def test_verify_csv_output(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "hermite", "--output", "csv",
        "--q", "1/2", "--n-max", "4",
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["status"] == "pass" for r in rows)


def test_float_mode_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "hermite", "--q", "1/2", "--mode", "float",
        "--precision-bits", "256", "--n-max", "3",
    )
    assert code == 0
    payload = json.loads(out)
    ctx = QContext.inexact(Fraction(1, 2), 256)
    fam = HermiteFamily(ctx, 3)
    rebuilt = poly_from_strings(payload["rows"][3]["coeffs"], "float", 256)
    assert rebuilt.coeffs == fam.hermite(3).coeffs
