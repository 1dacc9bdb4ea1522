"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import json
import subprocess
import sys

import fockdec.cli
from fockdec.cli import main

GOLDEN_CANONICAL_CSV = (
    ",-|3,1|2,-|2.1\n"
    "-|3,1*v^0,.,.\n"
    "3|-,1*v^1,.,.\n"
    "1|2,1*v^1,1*v^0,.\n"
    "-|2.1,.,.,1*v^0\n"
    "2|1,1*v^2,1*v^1,.\n"
    "2.1|-,.,.,1*v^1\n"
    "1|1.1,1*v^1,1*v^2,.\n"
    "1.1|1,1*v^2,1*v^3,.\n"
    "-|1.1.1,1*v^2,.,.\n"
    "1.1.1|-,1*v^3,.,.\n"
)

ABACUS_ARGS = [
    "abacus",
    "--multipartition",
    "1.1|1.1|1",
    "--charge",
    "0,0,-1",
    "--e",
    "2",
]


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_canonical_csv_golden(capsys):
    rc, out, err = run(
        capsys, "canonical", "--e", "2", "--charge", "0,0", "--rank", "3",
        "--format", "csv",
    )
    assert rc == 0
    assert out == GOLDEN_CANONICAL_CSV
    assert err == ""


def test_golden_comparison_has_teeth(capsys):
    rc, out, _ = run(
        capsys, "canonical", "--e", "2", "--charge", "0,0", "--rank", "3",
        "--format", "csv",
    )
    corrupted = GOLDEN_CANONICAL_CSV.replace("1*v^3", "1*v^4", 1)
    assert corrupted != GOLDEN_CANONICAL_CSV
    assert out != corrupted


def test_output_is_deterministic(capsys):
    args = ["canonical", "--e", "2", "--charge", "0,0", "--rank", "4",
            "--format", "json"]
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    rc3, out3, _ = run(capsys, *args, "--threads", "4")
    assert rc1 == rc2 == rc3 == 0
    assert out1 == out2 == out3


def test_canonical_json_shape(capsys):
    rc, out, _ = run(
        capsys, "canonical", "--e", "inf", "--charge", "0,0", "--rank", "2",
        "--format", "json",
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["e"] == "inf"
    assert obj["charge"] == [0, 0]
    assert obj["rank"] == 2
    assert obj["matrix"]["col_labels"] == ["-|2", "1|1", "-|1.1"]


def test_factorize_text(capsys):
    rc, out, _ = run(
        capsys, "factorize", "--e", "2", "--charge", "0,0", "--rank", "3",
    )
    assert rc == 0
    assert "== basis matrix (e=2) ==" in out
    assert "== basis matrix (e=inf) ==" in out
    assert "== relative matrix ==" in out
    assert "product: PASS" in out
    assert "specialization: PASS" in out
    assert out.rstrip().endswith("all checks passed")


def test_factorize_json(capsys):
    rc, out, _ = run(
        capsys, "factorize", "--e", "3", "--charge", "0,1", "--rank", "3",
        "--format", "json",
    )
    assert rc == 0
    obj = json.loads(out)
    assert set(obj) == {
        "e", "charge", "rank", "basis_e", "basis_inf", "relative",
        "report", "all_pass",
    }
    assert obj["all_pass"] is True
    assert [item["check"] for item in obj["report"]] == [
        "product", "unitriangular", "order", "positivity", "specialization",
    ]
    assert obj["relative"]["row_labels"] == obj["basis_inf"]["col_labels"]


def test_factorize_csv_sections(capsys):
    rc, out, _ = run(
        capsys, "factorize", "--e", "2", "--charge", "0,0", "--rank", "3",
        "--format", "csv",
    )
    assert rc == 0
    assert "# basis matrix (e=2)\n" in out
    assert "# basis matrix (e=inf)\n" in out
    assert "# relative matrix\n" in out
    assert "# product,pass\n" in out
    assert GOLDEN_CANONICAL_CSV in out  # the e=2 block is the golden matrix


def test_factorize_failure_exit_code(capsys, monkeypatch):
    def fake_verify(de, dinf, drel, charge=None):
        return [{"check": "product", "pass": False, "detail": "forced"}]

    monkeypatch.setattr(fockdec.cli, "verify", fake_verify)
    rc, out, _ = run(
        capsys, "factorize", "--e", "2", "--charge", "0,0", "--rank", "2",
    )
    assert rc == 1
    assert "product: FAIL" in out
    assert "verification FAILED" in out


def test_factorize_rejects_no_modulus(capsys):
    rc, _, err = run(
        capsys, "factorize", "--e", "inf", "--charge", "0,0", "--rank", "2",
    )
    assert rc == 2
    assert "finite" in err


def test_guard_refuses_large_ranks(capsys):
    rc, _, err = run(
        capsys, "canonical", "--e", "2", "--charge", "0,0", "--rank", "13",
    )
    assert rc == 3
    assert "--guard" in err
    rc, out, _ = run(
        capsys, "crystal", "--e", "2", "--charge", "0", "--rank", "13",
        "--guard", "13",
    )
    assert rc == 0
    assert "rank 13:" in out


def test_usage_errors_exit_two(capsys):
    cases = [
        ["canonical", "--e", "1", "--charge", "0", "--rank", "2"],
        ["canonical", "--e", "oops", "--charge", "0", "--rank", "2"],
        ["canonical", "--e", "2", "--charge", "0", "--rank", "-1"],
        ["canonical", "--e", "2", "--charge", "0", "--rank", "2",
         "--format", "dot"],
        ["crystal", "--e", "2", "--charge", "0", "--rank", "2",
         "--format", "csv"],
        ABACUS_ARGS + ["--r", "7", "--stable-for", "3"],
        ABACUS_ARGS,
        ABACUS_ARGS + ["--r", "7", "--format", "latex"],
        ["abacus", "--multipartition", "1|1", "--charge", "0,0,-1",
         "--e", "2", "--r", "7"],
        ["abacus", "--multipartition", "1|1", "--charge", "0,0",
         "--e", "inf", "--r", "7"],
        ["order", "--left=3", "--right=2|1"],
        ["order", "--left=3", "--right=2"],
        ["order", "--left=3", "--right=2.1", "--charge", "0,0"],
    ]
    for argv in cases:
        rc, _, err = run(capsys, *argv)
        assert rc == 2, argv
        assert err != "", argv


def test_abacus_text_golden(capsys):
    rc, out, _ = run(capsys, *ABACUS_ARGS, "--r", "7")
    assert rc == 0
    assert out == (
        "r    = 7\n"
        "k    = 3, 1, 0, -2, -4, -6, -7\n"
        "w    = 0, -6, -7, 3, -2, 1, -4\n"
        "c    = 1, 1, 2, 2, 2, 2, 1\n"
        "d    = 2, 1, 3, 2, 1, 3, 3\n"
        "m    = 0, 0, -1, -1, -1, -2, -2\n"
        "phi  = 1, 1, 0, 0, 0, -2, -3\n"
        "a    = 1, 1, 1, 2, 2, 2, 2\n"
        "b    = 3, 3, 3, 2, 2, 1, 1\n"
        "zeta = 0, -2, -3, 1, 0, 1, 0\n"
        "\n"
        "phi:  1  0 -1 -2 -3\n"
        "  1:  o  o  .  .  .\n"
        "  2:  o  o  .  .  .\n"
        "  3:  .  o  .  o  o\n"
    )


def test_abacus_json(capsys):
    rc, out, _ = run(capsys, *ABACUS_ARGS, "--r", "7", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["r"] == 7
    assert obj["k"] == [3, 1, 0, -2, -4, -6, -7]
    assert obj["w"] == [0, -6, -7, 3, -2, 1, -4]
    assert obj["b"] == [3, 3, 3, 2, 2, 1, 1]


def test_abacus_stable_cut(capsys):
    rc, out, _ = run(capsys, *ABACUS_ARGS, "--stable-for", "3")
    assert rc == 0
    assert out.startswith("r    = 17\n")
    rc, out, _ = run(
        capsys, *ABACUS_ARGS, "--stable-for", "3", "--format", "json",
    )
    obj = json.loads(out)
    assert obj["r"] == 17 and obj["k"][-1] == -17


def test_abacus_r_too_small(capsys):
    rc, _, err = run(capsys, *ABACUS_ARGS, "--r", "5")
    assert rc == 3
    assert "r=5 is too small" in err
    assert "use --r 6 or more" in err


def test_order_text_and_json(capsys):
    rc, out, _ = run(capsys, "order", "--left=3", "--right=2.1")
    assert rc == 0 and out == "Greater\n"
    rc, out, _ = run(capsys, "order", "--left=2.1", "--right=3")
    assert rc == 0 and out == "Less\n"
    rc, out, _ = run(
        capsys, "order", "--left=-|2.1", "--right=2|1", "--charge", "0,0",
    )
    assert rc == 0 and out == "Incomparable\n"
    rc, out, _ = run(
        capsys, "order", "--left=-|2.1", "--right=2|1", "--format", "json",
    )
    assert rc == 0
    assert json.loads(out) == {
        "left": "-|2.1",
        "right": "2|1",
        "charge": [0, 0],
        "relation": "Incomparable",
    }
    rc, out, _ = run(
        capsys, "order", "--left=-|2.1", "--right=2|1", "--charge", "0,0",
        "--pad", "3",
    )
    assert rc == 0 and out == "Incomparable\n"


def test_crystal_outputs(capsys):
    rc, out, _ = run(
        capsys, "crystal", "--e", "2", "--charge", "0,0", "--rank", "0",
    )
    assert rc == 0 and out == "rank 0: -|-\n"
    rc, out, _ = run(
        capsys, "crystal", "--e", "2", "--charge", "0,0", "--rank", "2",
    )
    assert rc == 0
    assert "rank 2: -|2 1|1" in out
    assert "-|1 -0-> 1|1" in out
    rc, out, _ = run(
        capsys, "crystal", "--e", "2", "--charge", "0,0", "--rank", "1",
        "--format", "json",
    )
    obj = json.loads(out)
    assert obj["vertices"] == [["-|-"], ["-|1"]]
    rc, out, _ = run(
        capsys, "crystal", "--e", "2", "--charge", "0", "--rank", "1",
        "--format", "dot",
    )
    assert rc == 0 and out.startswith("digraph crystal {")


def test_missing_subcommand_exits_two(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_module_execution_matches_function():
    proc = subprocess.run(
        [sys.executable, "-m", "fockdec", "order", "--left=3", "--right=2.1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "Greater\n"
