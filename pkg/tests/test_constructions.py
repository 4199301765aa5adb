import pytest

from lierinehart.algebra import (
    LRMorphism, center, is_perfect, quotient_algebra, validate_lr, validate_morphism,
)
from lierinehart.constructions import (
    BUILTIN_NAMES, abelian_lie, atiyah_algebra, builtin, central_witness, chevalley_involution, dual_numbers,
    exp_nilpotent, free_module, lie_algebra, lie_as_lr, product, pullback_extension, sl2,
    transformation_algebra, transport, trivial_central_product, validate_gamma, validate_lie,
)
from lierinehart.exactlin import Matrix

# (dim L, dim A): read off from the definitions, e.g. A (x) g has dim A * dim g
DIMS = {
    "dual_numbers": (2, 2), "der_plus_a": (3, 2), "sl2": (3, 1), "heisenberg": (3, 1),
    "abelian(2)": (2, 1), "abelian(3)": (3, 1), "transformation(sl2,dual_numbers,0)": (6, 2),
    "sl2xsl2": (6, 1), "sl2_2v2": (7, 1), "sl2@dual_numbers": (3, 2),
}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_dimensions(name):
    L = builtin(name)
    assert (L.dim, L.base.dim) == DIMS[name]


def test_aliases_and_unknown_names():
    assert builtin("sl2_dual").bracket == builtin("transformation(sl2,dual_numbers,0)").bracket
    assert builtin("abelian(5)").dim == 5
    with pytest.raises(ValueError):
        builtin("e8")


@pytest.mark.parametrize("name", ["sl2", "heisenberg", "sl2_2v2"])
def test_lie_algebras_satisfy_jacobi(name):
    assert validate_lie(lie_algebra(name)) == []


def test_transformation_algebra_with_nonzero_action():
    A = dual_numbers()
    D = Matrix.from_rows([[0, 0], [0, 1]])         # eps d/d eps
    g = abelian_lie(1)
    L = transformation_algebra(g, A, [D])
    assert validate_lr(L) == []
    assert not L.has_zero_anchor
    # a non-derivation is refused
    assert validate_gamma(g, A, [Matrix.identity(2)]) != []


def test_gamma_must_be_a_lie_map():
    A = dual_numbers()
    D = Matrix.from_rows([[0, 0], [0, 1]])
    # sl2 has no nonzero Lie map into the one-dimensional abelian Der(Q[eps])
    assert validate_gamma(sl2(), A, [D, D, D]) != []


def test_atiyah_algebra_of_free_module():
    A = dual_numbers()
    for rank in (1, 2):
        L = atiyah_algebra(A, free_module(A, rank))
        # End_A(A^r) (+) Der(A) as vector spaces
        assert L.dim == rank * rank * A.dim + 1


def test_product_projections_are_morphisms():
    s = builtin("sl2")
    P, p1, p2 = product(s, s)
    assert P.dim == 6 and is_perfect(P)
    assert validate_morphism(p1) == [] and validate_morphism(p2) == []
    assert p1.kernel().intersect(p2.kernel()).rank == 0


def test_transport_gives_isomorphic_algebra():
    L = builtin("sl2")
    T = Matrix.from_rows([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    M = transport(L, T)
    assert validate_lr(M) == []
    assert validate_morphism(LRMorphism(L, M, T)) == []


def test_trivial_central_product_and_pullback():
    L = builtin("sl2_dual")
    E, p = trivial_central_product(L, free_module(L.base, 1))
    assert E.dim == L.dim + 2
    assert central_witness(p)
    h = LRMorphism(L, L, Matrix.identity(L.dim))
    P, witness, pN = pullback_extension(p, h)
    assert witness and validate_morphism(pN) == []
    assert P.dim == E.dim


def test_non_central_extension_is_reported():
    H = builtin("heisenberg")
    # projecting onto a line kills a non-central vector
    A1 = builtin("abelian(1)")
    q = LRMorphism(H, A1, Matrix.from_rows([[1, 0, 0]]))
    assert validate_morphism(q) == []
    w = central_witness(q)
    assert not w and w.report[0].axiom == "central.kernel_not_central"
    _, c = quotient_algebra(H, center(H))
    assert central_witness(c)


def test_chevalley_involution_is_an_automorphism():
    L = builtin("sl2")
    w = chevalley_involution()
    assert validate_morphism(LRMorphism(L, L, w)) == []
    assert w @ w == Matrix.identity(3)


def test_exp_of_nilpotent_is_automorphism():
    L = builtin("sl2")
    g = exp_nilpotent(L.ad[1], 3)
    assert validate_morphism(LRMorphism(L, L, g)) == []
    with pytest.raises(ValueError):
        exp_nilpotent(L.ad[0])


def test_lie_as_lr_over_dual_numbers_uses_augmentation():
    L = lie_as_lr(sl2(), dual_numbers())
    # eps acts by zero, 1 acts by the identity
    assert L.a_ops[1].is_zero() and L.a_ops[0] == Matrix.identity(3)
