"""Invariance of computed dimensions under random changes of basis."""

from hypothesis import assume, given, settings, strategies as st

from lierinehart.algebra import LRMorphism, center, trivial_left_module, validate_lr, validate_morphism
from lierinehart.constructions import builtin, transport
from lierinehart.exactlin import Matrix
from lierinehart.homology import cohomology
from lierinehart.nabtensor import self_actions, tensor_product
from lierinehart.uce import build_uce

small = st.integers(-2, 2)


@st.composite
def invertible(draw, n):
    rows = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))
    m = Matrix.from_rows(rows)
    assume(m.is_invertible())
    return m


@settings(max_examples=15, deadline=None)
@given(invertible(3), st.sampled_from(["sl2", "heisenberg"]))
def test_transport_preserves_uce_and_cohomology(T, name):
    L = builtin(name)
    M = transport(L, T)
    assert validate_lr(M) == []
    assert validate_morphism(LRMorphism(L, M, T)) == []
    U, V = build_uce(L), build_uce(M)
    assert (U.dim, U.kernel.rank) == (V.dim, V.kernel.rank)
    for n in range(3):
        assert cohomology(L, trivial_left_module(L), n).dim == cohomology(M, trivial_left_module(M), n).dim
    assert center(M).rank == center(L).rank


@settings(max_examples=8, deadline=None)
@given(invertible(3))
def test_transport_preserves_tensor_square(T):
    L = builtin("heisenberg")
    assert tensor_product(self_actions(transport(L, T))).dim == 6


@settings(max_examples=4, deadline=None)
@given(invertible(3), st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_a_linear_transport_over_dual_numbers_keeps_uce(g, h):
    # basis a_i (x) x_j at i*3 + j; [[g, 0], [h, g]] commutes with multiplication by eps
    L = builtin("sl2_dual")
    T = Matrix.from_rows([list(g.entries[r]) + [0, 0, 0] for r in range(3)]
                         + [list(h[r]) + list(g.entries[r]) for r in range(3)])
    M = transport(L, T)
    assert validate_lr(M) == []
    U = build_uce(M)
    assert (U.dim, U.kernel.rank) == (6, 0)
