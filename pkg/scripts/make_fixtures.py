"""Regenerate the fixture corpus under fixtures/ (or verify it with --check)."""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from lierinehart.algebra import LRMorphism, adjoint_module, center, quotient_algebra, trivial_left_module
from lierinehart.constructions import BUILTIN_NAMES, builtin, product
from lierinehart.exactlin import Matrix, Subspace
from lierinehart.fileformat import dump_actions, dump_algebra, dump_module, dump_morphism, dumps
from lierinehart.lifting import doublet_mixing
from lierinehart.nabtensor import ActionPair
from lierinehart.uce import build_uce, linear_section

ROOT = Path(__file__).resolve().parent.parent / "fixtures"


def slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def corpus() -> dict:
    """Relative path -> document."""
    out = {}
    for name in BUILTIN_NAMES:
        out[f"algebras/{slug(name)}.json"] = dump_algebra(builtin(name))

    doc = dump_algebra(builtin("sl2_dual"))
    S = builtin("sl2_dual")
    doc["modules"] = {"adjoint": dump_module(adjoint_module(S)), "trivial": dump_module(trivial_left_module(S))}
    out["algebras/sl2_dual_with_modules.json"] = doc

    # covering of sl2_2v2 whose kernel C inside uce is nonzero
    L = builtin("sl2_2v2")
    U = build_uce(L)
    Lp, q = quotient_algebra(U.algebra, Subspace.span([U.kernel.basis[0]], U.dim), name="sl2_2v2_cover")
    out["algebras/sl2_2v2_cover.json"] = dump_algebra(Lp)
    f = LRMorphism(Lp, L, U.uce_morphism.matrix @ linear_section(q))
    out["morphisms/sl2_2v2_covering.json"] = {"morphisms": {
        "covering": dump_morphism(f, "../algebras/sl2_2v2_cover.json", "builtin:sl2_2v2")}}
    mix = {"swap": (0, 1, 1, 0), "shear": (1, 0, 1, 1), "scale": (1, 0, 0, 2), "upper": (1, 1, 0, 1)}
    out["morphisms/doublet_mixings.json"] = {"morphisms": {
        k: dump_morphism(LRMorphism(L, L, doublet_mixing(*v)), "builtin:sl2_2v2", "builtin:sl2_2v2")
        for k, v in mix.items()}}

    # pullback of heisenberg -> abelian(2) along a line
    H = builtin("heisenberg")
    Q, c = quotient_algebra(H, center(H))
    A2, A1 = builtin("abelian(2)"), builtin("abelian(1)")
    if Q.bracket != A2.bracket:
        raise AssertionError("quotient of heisenberg is not abelian(2) in this basis")
    out["morphisms/pullback_heisenberg.json"] = {"morphisms": {
        "c": dump_morphism(LRMorphism(H, A2, c.matrix), "builtin:heisenberg", "builtin:abelian(2)"),
        "f": dump_morphism(LRMorphism(A1, A2, Matrix.from_columns([[1, 0]], 2)), "builtin:abelian(1)",
                           "builtin:abelian(2)")}}

    # split sequence sl2 -> sl2 x sl2 -> sl2
    s2 = builtin("sl2")
    P, p1, p2 = product(s2, s2)
    i1 = Matrix.from_columns([P.basis(i) for i in range(3)], 6)
    i2 = Matrix.from_columns([P.basis(3 + i) for i in range(3)], 6)
    out["algebras/sl2_times_sl2.json"] = dump_algebra(P)
    out["morphisms/split_sl2.json"] = {"morphisms": {
        "f": dump_morphism(LRMorphism(s2, P, i1), "builtin:sl2", "../algebras/sl2_times_sl2.json"),
        "g": dump_morphism(p2, "../algebras/sl2_times_sl2.json", "builtin:sl2"),
        "s": dump_morphism(LRMorphism(s2, P, i2), "builtin:sl2", "../algebras/sl2_times_sl2.json")}}

    out["actions/bracket.json"] = {"actions": "bracket"}
    out["actions/heisenberg_abelian2_trivial.json"] = dump_actions(
        ActionPair.trivial(H, A2))

    # malformed inputs for the parser tests
    bad = dump_algebra(builtin("dual_numbers"))
    bad["base"]["unit"] = [1, 0, 0]
    out["bad/unit_dimension_mismatch.json"] = bad
    bad = dump_algebra(builtin("sl2"))
    bad["algebra"]["bracket"][0][1][1] = "1/2"
    out["bad/sl2_broken_bracket.json"] = bad
    bad = dump_algebra(builtin("sl2"))
    bad["algebra"]["bracket"][0][1][1] = 2.0
    out["bad/float_scalar.json"] = bad
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="compare instead of writing; exit 1 on drift")
    args = ap.parse_args(argv)
    drift = []
    for rel, doc in sorted(corpus().items()):
        path = ROOT / rel
        text = dumps(doc) + "\n"
        if args.check:
            if not path.exists() or path.read_text() != text:
                drift.append(rel)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
    if args.check:
        for rel in drift:
            print(f"out of date: {rel}")
        return 1 if drift else 0
    print(f"wrote {len(corpus())} fixtures under {ROOT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
