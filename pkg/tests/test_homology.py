import pytest

from lierinehart.algebra import (
    adjoint_module, base_as_left_module, trivial_left_module, trivial_right_module, validate_left_module,
)
from lierinehart.constructions import (
    BUILTIN_NAMES, LieAlgebraOverK, base_algebra, builtin, lie_algebra, transformation_algebra,
)
from lierinehart.exactlin import Matrix
from lierinehart.homology import (
    DEGREE_ENV, ce_cohomology, chain_boundary, coboundary, cohomology, der_module, homology, max_degree,
    rinehart_vs_ce,
)

# dims of H^0..H^3 with the trivial one-dimensional module
GOLDEN = {
    "dual_numbers": [1, 1, 0, 0], "der_plus_a": [1, 2, 1, 0], "sl2": [1, 0, 0, 1],
    "heisenberg": [1, 2, 2, 1], "abelian(2)": [1, 2, 1, 0], "abelian(3)": [1, 3, 3, 1],
    "transformation(sl2,dual_numbers,0)": [1, 0, 0, 1], "sl2xsl2": [1, 0, 0, 2],
    "sl2_2v2": [1, 0, 3, 1], "sl2@dual_numbers": [1, 0, 0, 1],
}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_coboundary_squares_to_zero(name):
    L = builtin(name)
    M = trivial_left_module(L)
    for n in range(0, 3):
        d0, d1 = coboundary(L, M, n), coboundary(L, M, n + 1)
        assert (d1 @ d0).is_zero()


@pytest.mark.parametrize("name", [n for n in BUILTIN_NAMES if builtin(n).has_zero_anchor])
def test_boundary_squares_to_zero(name):
    L = builtin(name)
    R = trivial_right_module(L)
    for n in range(2, 4):
        dn = chain_boundary(L, R, n)[2]
        dn1 = chain_boundary(L, R, n - 1)[2]
        assert (dn1 @ dn).is_zero()


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_golden_cohomology(name):
    L = builtin(name)
    M = trivial_left_module(L)
    assert [cohomology(L, M, n).dim for n in range(4)] == GOLDEN[name]


@pytest.mark.parametrize("name", ["sl2", "heisenberg", "abelian(2)", "abelian(3)", "sl2xsl2", "sl2_2v2"])
def test_cohomology_over_q_matches_ce(name):
    L = builtin(name)
    g = LieAlgebraOverK.create(L.dim, L.bracket, name)
    M = trivial_left_module(L)
    assert [cohomology(L, M, n).dim for n in range(4)] == [ce_cohomology(g, None, n) for n in range(4)]


@pytest.mark.parametrize("name", ["sl2", "heisenberg", "abelian(3)", "sl2xsl2"])
def test_homology_dual_to_cohomology_over_q(name):
    L = builtin(name)
    R = trivial_right_module(L)
    M = trivial_left_module(L)
    assert [homology(L, R, n) for n in range(4)] == [cohomology(L, M, n).dim for n in range(4)]


@pytest.mark.parametrize("g", ["sl2", "heisenberg", "abelian(2)"])
@pytest.mark.parametrize("A", ["rationals", "dual_numbers"])
def test_transformation_algebra_cohomology_equals_ce(g, A):
    res = rinehart_vs_ce(lie_algebra(g), base_algebra(A))
    assert res["equal"], res


def test_ce_adjoint_cohomology_of_sl2_vanishes():
    g = lie_algebra("sl2")
    rho = [g.ad(i) for i in range(3)]
    assert [ce_cohomology(g, rho, n, 3) for n in range(4)] == [0, 0, 0, 0]


def _corpus_pairs():
    for name in BUILTIN_NAMES:
        L = builtin(name)
        yield name, "trivial", L, trivial_left_module(L)
        if L.has_zero_anchor:
            yield name, "adjoint", L, adjoint_module(L)
        B = base_as_left_module(L)
        if validate_left_module(B) == []:
            yield name, "base", L, B


@pytest.mark.parametrize("name,kind,L,M", list(_corpus_pairs()), ids=lambda v: v if isinstance(v, str) else "")
def test_low_degree_exact_sequence(name, kind, L, M):
    D = der_module(L, M)
    assert D.identity_holds
    assert D.quotient_matches_h1


def test_cohomology_representatives_are_cocycles():
    L = builtin("heisenberg")
    M = trivial_left_module(L)
    res = cohomology(L, M, 2)
    d = coboundary(L, M, 2)
    for z in res.representatives:
        assert not any(d.apply(z))
    assert len(res.representatives) == res.dim


def test_degree_cap_from_environment(monkeypatch):
    L = builtin("sl2")
    M = trivial_left_module(L)
    monkeypatch.setenv(DEGREE_ENV, "1")
    assert max_degree() == 1
    with pytest.raises(ValueError, match="exceeds the cap"):
        cohomology(L, M, 2)
    monkeypatch.setenv(DEGREE_ENV, "4")
    assert cohomology(L, M, 4).dim == 0
    monkeypatch.setenv(DEGREE_ENV, "x")
    with pytest.raises(ValueError):
        max_degree()


def test_negative_degree_is_rejected():
    L = builtin("sl2")
    with pytest.raises(ValueError):
        cohomology(L, trivial_left_module(L), -1)


def test_coboundary_over_dual_numbers_is_a_linear_map_of_quotients():
    # the A-multilinear cochains of A (x) sl2 into the trivial module match those of sl2
    L = transformation_algebra(lie_algebra("sl2"), base_algebra("dual_numbers"))
    M = trivial_left_module(L)
    d = coboundary(L, M, 1)
    assert isinstance(d, Matrix) and d.shape == (3, 3)
