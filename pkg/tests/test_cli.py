import json
import subprocess
import sys
from pathlib import Path

import pytest

from lierinehart.cli import main

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_check_builtin_and_file(capsys):
    code, rep = run(capsys, "check", "--builtin", "sl2")
    assert code == 0 and rep["valid"] and rep["dim"] == 3
    code, rep = run(capsys, "check", str(FIX / "algebras" / "sl2_dual_numbers.json"))
    assert code == 0 and rep["base_dim"] == 2


def test_check_human_output(capsys):
    assert main(["check", "--builtin", "heisenberg"]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_bad_files_exit_one(capsys):
    for name in ("sl2_broken_bracket", "unit_dimension_mismatch", "float_scalar"):
        code, rep = run(capsys, "check", str(FIX / "bad" / f"{name}.json"))
        assert code == 1
        assert rep.get("error") == "ParseError" or rep["valid"] is False
    code, rep = run(capsys, "check", str(FIX / "bad" / "sl2_broken_bracket.json"))
    assert rep["valid"] is False
    assert any(v["axiom"] == "bracket.antisymmetry" for v in rep["violations"])


def test_usage_errors_exit_two(capsys):
    assert main(["check", "--builtin", "e8"]) == 2
    assert main(["check", str(FIX / "nope.json")]) == 2
    assert main(["check"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_center_and_commutator(capsys):
    code, rep = run(capsys, "center", "--builtin", "heisenberg")
    assert code == 0 and rep["dim"] == 1 and len(rep["basis"]) == 1
    code, rep = run(capsys, "commutator", "--builtin", "sl2_dual")
    assert rep == {"dim": 6, "codim": 0, "perfect": True}


def test_uce(capsys):
    code, rep = run(capsys, "uce", "--builtin", "sl2")
    assert code == 0
    assert rep["quotient_dim"] == 3 and rep["kernel_dim"] == 0 and rep["central"]
    code, rep = run(capsys, "uce", "--builtin", "heisenberg")
    assert rep["quotient_dim"] == 3 and rep["kernel_dim"] == 2 and not rep["perfect"]


def test_cohomology_and_homology(capsys):
    code, rep = run(capsys, "cohomology", "--builtin", "heisenberg", "--degree", "3")
    assert rep["dims"] == [1, 2, 2, 1]
    code, rep = run(capsys, "homology", "--builtin", "sl2", "--degree", "3")
    assert rep["dims"] == [1, 0, 0, 1]
    code, rep = run(capsys, "cohomology", str(FIX / "algebras" / "sl2_dual_with_modules.json"),
                    "--module", "adjoint", "--degree", "1")
    assert code == 0 and rep["dims"] == [0, 0]


def test_cohomology_beyond_cap_is_a_validation_failure(capsys):
    code, rep = run(capsys, "cohomology", "--builtin", "sl2", "--degree", "9")
    assert code == 1 and "cap" in rep["message"]


def test_compare_ce(capsys):
    code, rep = run(capsys, "compare-ce", "--lie", "heisenberg", "--base", "dual_numbers")
    assert code == 0 and rep["equal"] and rep["ce"] == [1, 2, 2]


def test_tensor(capsys):
    code, rep = run(capsys, "tensor", "--builtin", "heisenberg")
    assert code == 0 and rep["dim"] == 6
    code, rep = run(capsys, "tensor", "--builtin", "sl2_dual", "--hat")
    assert rep["dim"] == 6 and rep["uce_iso"]
    code, rep = run(capsys, "tensor", "--builtin", "heisenberg", "--builtin-other", "abelian(2)",
                    "--actions", str(FIX / "actions" / "heisenberg_abelian2_trivial.json"))
    assert rep["dim"] == 4


def test_lift_aut(capsys):
    code, rep = run(capsys, "lift-aut", "--builtin", "sl2", "--chevalley", "--sample", "10")
    assert code == 0 and rep["covering_kernel_in_uce"] == 0
    assert len(rep["results"]) == 11 and all(r["lifted"] for r in rep["results"])
    code, rep = run(capsys, "lift-aut", str(FIX / "morphisms" / "sl2_2v2_covering.json"),
                    str(FIX / "morphisms" / "doublet_mixings.json"))
    by = {r["name"]: r for r in rep["results"]}
    assert by["scale"]["lifted"] and not by["swap"]["lifted"] and "witness" in by["swap"]


def test_lift_der(capsys):
    code, rep = run(capsys, "lift-der", str(FIX / "morphisms" / "sl2_2v2_covering.json"))
    assert rep["derivations"] == 11 and rep["lifted"] == 10


def test_pullback(capsys):
    code, rep = run(capsys, "pullback", str(FIX / "morphisms" / "pullback_heisenberg.json"))
    assert code == 0 and rep["central"] and rep["dim"] == 2 and rep["kernel_dim"] == 1


def test_split_uce(capsys):
    code, rep = run(capsys, "split-uce", "--builtin", "sl2")
    assert code == 0 and rep["ok"] and rep["dims"]["uce_M"] == 6
    code, rep = run(capsys, "split-uce", "--morphisms", str(FIX / "morphisms" / "split_sl2.json"))
    assert code == 0 and rep["ok"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "lierinehart", "--json", "uce", "--builtin", "sl2"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["quotient_dim"] == 3
