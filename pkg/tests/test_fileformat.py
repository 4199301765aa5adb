import json
import subprocess
import sys
from pathlib import Path

import pytest

from lierinehart.algebra import AxiomError, LeftLRModule
from lierinehart.constructions import BUILTIN_NAMES, builtin
from lierinehart.fileformat import (
    ParseError, dump_algebra, dumps, load_actions, load_algebra, load_modules, load_morphisms,
    parse_algebra,
)
from lierinehart.nabtensor import self_actions

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_round_trip(name, tmp_path):
    L = builtin(name)
    p = tmp_path / "alg.json"
    p.write_text(dumps(dump_algebra(L)))
    M = load_algebra(p)
    assert (M.base, M.dim, M.a_action, M.bracket, M.anchor) == (L.base, L.dim, L.a_action, L.bracket, L.anchor)


def test_sl2_fixture_equals_builtin():
    L, F = builtin("sl2"), load_algebra(FIX / "algebras" / "sl2.json")
    assert F.bracket == L.bracket and F.base == L.base


def test_fractions_are_written_as_strings():
    doc = dump_algebra(builtin("sl2_2v2"))
    text = dumps(doc)
    assert "." not in "".join(c for c in text if not c.isalpha())


def test_modules_load_and_validate():
    mods = load_modules(FIX / "algebras" / "sl2_dual_with_modules.json")
    assert set(mods) == {"adjoint", "trivial"}
    assert all(isinstance(m, LeftLRModule) for m in mods.values())
    assert mods["adjoint"].dim == 6 and mods["trivial"].dim == 1


def test_morphism_references_resolve():
    mors = load_morphisms(FIX / "morphisms" / "split_sl2.json")
    assert set(mors) == {"f", "g", "s"}
    assert mors["f"].target.dim == 6
    assert set(load_morphisms(FIX / "morphisms" / "doublet_mixings.json")) == {"swap", "shear", "scale", "upper"}


def test_actions_files():
    L = builtin("sl2")
    assert load_actions(FIX / "actions" / "bracket.json", L, L) == self_actions(L)
    H, A2 = builtin("heisenberg"), builtin("abelian(2)")
    pair = load_actions(FIX / "actions" / "heisenberg_abelian2_trivial.json", H, A2)
    assert not any(x for r in pair.l_on_m for v in r for x in v)


def test_unit_dimension_mismatch():
    with pytest.raises(ParseError, match="dimension mismatch"):
        load_algebra(FIX / "bad" / "unit_dimension_mismatch.json")


def test_broken_bracket_reports_violations():
    with pytest.raises(AxiomError) as exc:
        load_algebra(FIX / "bad" / "sl2_broken_bracket.json")
    names = {v.axiom for v in exc.value.report}
    assert "bracket.antisymmetry" in names


def test_float_scalars_are_rejected():
    with pytest.raises(ParseError, match="malformed scalar"):
        load_algebra(FIX / "bad" / "float_scalar.json")


def test_missing_field_location():
    doc = dump_algebra(builtin("sl2"))
    del doc["algebra"]["bracket"]
    with pytest.raises(ParseError) as exc:
        parse_algebra(doc)
    assert exc.value.where == "/algebra"


def test_invalid_json_reports_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"base": ')
    with pytest.raises(ParseError):
        load_algebra(p)


def test_fixtures_are_up_to_date():
    r = subprocess.run([sys.executable, str(ROOT / "scripts" / "make_fixtures.py"), "--check"],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stdout


def test_fixture_files_are_json_objects():
    for p in FIX.rglob("*.json"):
        assert isinstance(json.loads(p.read_text()), dict), p
