"""Command-line interface: golden outputs, exit codes, JSON envelope."""

import json

import pytest

import gridnull as g
import gridnull.cli as cli


def _run(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_set_golden_block(capsys):
    code, out, _ = _run(capsys, ["analyze-set", "--field", "F7", "--set", "mul(3)"])
    assert code == 0
    assert out == (
        "field: F7\n"
        "set: {1, 2, 4}\n"
        "size: 3\n"
        "char_poly: X^3 + 6\n"
        "nullity: 2\n"
        "vandermonde_degree: 2\n"
        "moments.e: [1, 0, 0, 1]\n"
        "moments.h: [1, 0, 0, 1]\n"
        "moments.p: [3, 0, 0, 3]\n"
    )


def test_analyze_set_json_envelope(capsys):
    code, out, _ = _run(
        capsys, ["analyze-set", "--field", "F7", "--set", "mul(3)", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["schema_version"] == "1"
    assert data["set"] == "{1, 2, 4}"
    assert data["nullity"] == 2
    assert data["moments"]["e"] == ["1", "0", "0", "1"]


def test_analyze_set_wants_one_set(capsys):
    code, _, err = _run(
        capsys,
        ["analyze-set", "--field", "F7", "--set", "mul(3)", "--set", "mul(2)"],
    )
    assert code == 2
    assert "exactly one" in err


def test_analyze_grid(capsys):
    code, out, _ = _run(
        capsys, ["analyze-grid", "--field", "F7", "--grid", "mul(3) x {0}"]
    )
    assert code == 0
    assert "joint_nullity: 1\n" in out
    assert "has_singleton: true\n" in out
    assert "factor_nullities: [2, 1]\n" in out


def test_cn_check_witness_and_exit_code(capsys):
    code, out, _ = _run(
        capsys,
        [
            "cn-check",
            "--field",
            "Q",
            "--grid",
            "{-1,0,1} x {-1,0,1}",
            "--poly",
            "x1*x2 - x1^3",
        ],
    )
    assert code == 0
    assert "hypothesis_ok: true\n" in out
    assert "qualifying_monomials: [(1, 1)]\n" in out
    assert "witness: (-1, -1)\n" in out
    assert "verdict: true\n" in out


def test_witness_line_formatting(capsys):
    # first non-vanishing point of x1*x2 on {0,1} x {-1,0} is (1, -1)
    Q = g.Rationals()
    grid = g.grid_make([g.FiniteSet(Q, [0, 1]), g.FiniteSet(Q, [-1, 0])])
    report = g.gcn_check(g.parse_poly("x1*x2", 2, Q), grid)
    text = cli.emit_report(report)
    assert "witness: (1, -1)" in text.splitlines()


def test_coeff_with_target_monomial(capsys):
    code, out, _ = _run(
        capsys,
        [
            "coeff",
            "--field",
            "F7",
            "--grid",
            "mul(3) x mul(3)",
            "--poly",
            "2*x1*x2 + 3",
            "--k",
            "1,1",
        ],
    )
    assert code == 0
    assert out == "target: (1, 1)\nextracted: 2\ndirect_coefficient: 2\nverdict: true\n"


def test_coeff_top_monomial_report(capsys):
    code, out, _ = _run(
        capsys,
        [
            "coeff",
            "--field",
            "F7",
            "--grid",
            "mul(3) x mul(3)",
            "--poly",
            "x1^2*x2^2 + 2*x1",
        ],
    )
    assert code == 0
    assert "target: (2, 2)\n" in out
    assert "weighted_sum: 1\n" in out
    assert "direct_coefficient: 1\n" in out
    assert "verdict: true\n" in out


def test_coeff_degree_violation_exits_2(capsys):
    code, _, err = _run(
        capsys,
        [
            "coeff",
            "--field",
            "F7",
            "--grid",
            "mul(3) x mul(3)",
            "--poly",
            "x1^2*x2^2 + x1*x2",
            "--k",
            "0,0",
        ],
    )
    assert code == 2
    assert "error:" in err


def test_interpolate_round_trip(capsys):
    code, out, _ = _run(
        capsys,
        [
            "interpolate",
            "--field",
            "F7",
            "--grid",
            "mul(3) x mul(3)",
            "--poly",
            "2*x1*x2 + 3",
        ],
    )
    assert code == 0
    assert "reconstructed: 2*x1*x2 + 3\n" in out
    assert "verdict: true\n" in out


def test_interpolate_aliasing_exits_1(capsys):
    code, out, _ = _run(
        capsys,
        ["interpolate", "--field", "F7", "--grid", "mul(3)", "--poly", "x1^3"],
    )
    assert code == 1
    assert "reconstructed: 1\n" in out
    assert "verdict: false\n" in out


def test_grid_sum_golden(capsys):
    code, out, _ = _run(
        capsys,
        ["grid-sum", "--field", "Q", "--grid", "{-1,1}", "--poly", "3*x1 + 5"],
    )
    assert code == 0
    assert out == "mode: plain\nsum: 10\n"


def test_sumset_cd(capsys):
    code, out, _ = _run(
        capsys,
        ["sumset-cd", "--field", "F7", "--set", "mul(3)", "--set", "mul(3)"],
    )
    assert code == 0
    assert "name: cauchy-davenport\n" in out
    assert "details.lambda_sum: 5\n" in out
    assert "details.sumset: {1, 2, 3, 4, 5, 6}\n" in out
    code, _, err = _run(capsys, ["sumset-cd", "--field", "F7", "--set", "mul(3)"])
    assert code == 2
    assert "two" in err


def test_plane_scan_pass_and_fail(capsys):
    code, out, _ = _run(
        capsys,
        ["plane-scan", "--field", "F7", "--grid", "mul(3) x mul(3) x mul(2)"],
    )
    assert code == 0
    assert "instances: 57\n" in out
    assert "verdict: true\n" in out
    assert "counterexamples: []\n" in out
    code, out, _ = _run(
        capsys,
        ["plane-scan", "--field", "F7", "--grid", "{1,2} x {1,2}"],
    )
    assert code == 1
    assert "verdict: false\n" in out
    assert "count: 1" in out


def test_oracle_suite_scd(capsys):
    code, out, _ = _run(capsys, ["oracle-suite", "--scan", "scd", "--p", "5", "--seed", "42"])
    assert code == 0
    assert "name: scd\n" in out
    assert "instances: 961\n" in out
    assert "verdict: true\n" in out
    assert "seed: 42\n" in out
    assert "elapsed_seconds:" in out


def test_oracle_suite_redei_json(capsys):
    code, out, _ = _run(capsys, ["oracle-suite", "--scan", "redei", "--q", "5", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["schema_version"] == "1"
    assert data["instances"] == 31
    assert data["verdict"] is True
    assert data["details"]["qualifying"] == ["{1, 2, 3, 4}", "{0, 1, 2, 3, 4}"]


def test_oracle_suite_ore(capsys):
    code, out, _ = _run(capsys, ["oracle-suite", "--scan", "ore", "--field", "F3^2"])
    assert code == 0
    assert "instances: 6\n" in out
    assert "verdict: true\n" in out


def test_oracle_suite_missing_parameter(capsys):
    code, _, err = _run(capsys, ["oracle-suite", "--scan", "scd"])
    assert code == 2
    assert "--p" in err


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("GRIDNULL_SEED", "7")
    code, out, _ = _run(capsys, ["oracle-suite", "--scan", "scd", "--p", "2"])
    assert code == 0
    assert "seed: 7\n" in out


def test_poly_and_grid_files(capsys, tmp_path):
    poly_file = tmp_path / "f.txt"
    poly_file.write_text("3*x1 + 5\n")
    grid_file = tmp_path / "grid.txt"
    grid_file.write_text("{-1,1}\n")
    code, out, _ = _run(
        capsys,
        [
            "grid-sum",
            "--field",
            "Q",
            "--grid-file",
            str(grid_file),
            "--poly-file",
            str(poly_file),
        ],
    )
    assert code == 0
    assert "sum: 10\n" in out


def test_inline_and_file_conflict(capsys, tmp_path):
    poly_file = tmp_path / "f.txt"
    poly_file.write_text("x1")
    code, _, err = _run(
        capsys,
        [
            "grid-sum",
            "--field",
            "Q",
            "--grid",
            "{-1,1}",
            "--poly",
            "x1",
            "--poly-file",
            str(poly_file),
        ],
    )
    assert code == 2
    assert "not both" in err


def test_parse_errors_exit_2(capsys):
    code, _, err = _run(capsys, ["analyze-set", "--field", "F7", "--set", "{1,2"])
    assert code == 2
    assert "error:" in err
    code, _, err = _run(capsys, ["analyze-set", "--field", "Z12", "--set", "{1}"])
    assert code == 2
    assert "error:" in err


def test_normalize_empty_tuple_renders_as_list():
    report = g.ScanReport(name="demo", instances=1, verdict=True)
    assert "counterexamples: []" in cli.emit_report(report).splitlines()
