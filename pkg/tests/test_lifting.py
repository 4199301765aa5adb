from pathlib import Path

import pytest

from lierinehart.algebra import LRMorphism, quotient_algebra, validate_morphism
from lierinehart.constructions import builtin, chevalley_involution, product
from lierinehart.exactlin import Matrix, Subspace
from lierinehart.fileformat import load_morphisms
from lierinehart.lifting import (
    DerivationPair, derivations_closed, descend_automorphism, doublet_mixing, lift_automorphism,
    lift_derivation, make_covering, rinehart_derivations, sl2_automorphism_sample, split_uce_check,
    validate_derivation,
)
from lierinehart.uce import build_uce, linear_section

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="module")
def sl2_cover():
    return make_covering(build_uce(builtin("sl2")).uce_morphism)


@pytest.fixture(scope="module")
def doublet_cover():
    L = builtin("sl2_2v2")
    U = build_uce(L)
    Lp, q = quotient_algebra(U.algebra, Subspace.span([U.kernel.basis[0]], U.dim))
    return make_covering(LRMorphism(Lp, L, U.uce_morphism.matrix @ linear_section(q)))


def test_sl2_covering_has_trivial_c(sl2_cover):
    assert sl2_cover.C.rank == 0
    assert sl2_cover.f.kernel().rank == 0


def test_chevalley_involution_lifts(sl2_cover):
    L = builtin("sl2")
    h = LRMorphism(L, L, chevalley_involution())
    res = lift_automorphism(sl2_cover, h)
    assert res.lifted
    f = sl2_cover.f.matrix
    assert f @ res.lift.matrix == h.matrix @ f


def test_sampled_automorphisms_lift_uniquely(sl2_cover):
    L = builtin("sl2")
    f = sl2_cover.f.matrix
    samples = sl2_automorphism_sample(10, seed=1)
    assert len(samples) == 10
    for m in samples:
        h = LRMorphism(L, L, m)
        assert validate_morphism(h) == []
        res = lift_automorphism(sl2_cover, h)
        assert res.lifted
        # f is injective here, so f h' = h f pins h' down
        assert f @ res.lift.matrix == m @ f
        assert res.lift.matrix == f.inverse() @ m @ f


def test_covering_with_nonzero_c_refuses_some_mixings(doublet_cover):
    L = builtin("sl2_2v2")
    assert doublet_cover.C.rank == 1
    outcomes = {}
    for name, abcd in {"swap": (0, 1, 1, 0), "shear": (1, 0, 1, 1), "scale": (1, 0, 0, 2)}.items():
        outcomes[name] = lift_automorphism(doublet_cover, LRMorphism(L, L, doublet_mixing(*abcd)))
    assert outcomes["scale"].lifted
    refused = [r for r in outcomes.values() if not r.lifted]
    assert refused
    for r in refused:
        assert r.witness is not None and any(r.witness)
        assert "witness" in r.to_dict()


def test_lifted_automorphism_descends_back(doublet_cover):
    L = builtin("sl2_2v2")
    h = LRMorphism(L, L, doublet_mixing(1, 0, 0, 2))
    res = lift_automorphism(doublet_cover, h)
    assert descend_automorphism(doublet_cover, res.lift).matrix == h.matrix


def test_doublet_mixing_requires_invertible_matrix():
    with pytest.raises(ValueError):
        doublet_mixing(1, 2, 2, 4)


def test_derivations_of_sl2_2v2(doublet_cover):
    L = builtin("sl2_2v2")
    ders = rinehart_derivations(L)
    assert len(ders) == 11
    assert derivations_closed(L, ders)
    results = [lift_derivation(doublet_cover, D) for D in ders]
    assert sum(r.lifted for r in results) == 10
    for D, r in zip(ders, results):
        if r.lifted:
            assert validate_derivation(doublet_cover.f.source, r.lift) == []


def test_inner_derivations_validate():
    L = builtin("sl2_dual")
    for i in range(L.dim):
        assert validate_derivation(L, DerivationPair.inner(L, L.basis(i))) == []


def test_derivations_over_dual_numbers_include_anchor_part():
    L = builtin("dual_numbers")
    ders = rinehart_derivations(L)
    assert ders and all(validate_derivation(L, D) == [] for D in ders)
    assert any(not D.delta0.is_zero() for D in ders)


def test_covering_fixture_matches_construction(doublet_cover):
    f = load_morphisms(FIXTURES / "morphisms" / "sl2_2v2_covering.json")["covering"]
    assert f.matrix == doublet_cover.f.matrix


def test_non_central_map_is_not_a_covering():
    H = builtin("heisenberg")
    q = LRMorphism(H, builtin("abelian(1)"), Matrix.from_rows([[1, 0, 0]]))
    with pytest.raises(ValueError):
        make_covering(q)


def test_split_uce_of_product():
    s = builtin("sl2")
    P, _, p2 = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    i2 = LRMorphism(s, P, Matrix.from_columns([P.basis(3 + i) for i in range(3)], 6))
    rep = split_uce_check(i1, p2, i2)
    assert rep.ok and rep.direct_product and rep.product_iso
    assert rep.dims["uce_M"] == rep.dims["uce_L"] + rep.dims["uce_N"] == 6
    assert rep.dims["ker_M"] == rep.dims["ker_L"] + rep.dims["ker_N"]


def test_split_uce_rejects_non_section():
    s = builtin("sl2")
    P, _, p2 = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    with pytest.raises(ValueError):
        split_uce_check(i1, p2, i1)
