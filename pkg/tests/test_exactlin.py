from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import sympy_nullity, sympy_rank
from lierinehart.exactlin import (
    Matrix, Subspace, close_under, image, image_of, json_scalar, kernel, preimage, quotient, scalar,
    solve, solve_vec,
)

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    # sparsify so that rank-deficient cases are common
    mask = draw(st.lists(st.booleans(), min_size=r * c, max_size=r * c))
    return Matrix.from_rows([[x if mask[i * c + j] else 0 for j, x in enumerate(row)] for i, row in enumerate(rows)])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_and_kernel_match_sympy(m):
    assert m.rank() == sympy_rank(m)
    K = kernel(m)
    assert K.rank == sympy_nullity(m)
    for v in K.basis:
        assert not any(m.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4), st.data())
def test_solve_returns_a_solution_when_consistent(m, data):
    x = data.draw(st.lists(entries, min_size=m.cols, max_size=m.cols))
    b = m.apply(x)
    y = solve_vec(m, b)
    assert y is not None
    assert m.apply(y) == b


def test_solve_reports_inconsistency():
    m = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve_vec(m, [1, 3]) is None
    assert solve(m, Matrix.from_rows([[1], [2]])) is not None


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_image_and_preimage_are_consistent(m):
    im = image(m)
    assert im.rank == m.rank()
    full = Subspace.full(m.rows)
    assert preimage(m, full).is_full()
    assert preimage(m, Subspace.zero(m.rows)) == kernel(m)
    assert image_of(m, Subspace.full(m.cols)) == im


def test_inverse_round_trip():
    m = Matrix.from_rows([[2, 1, 0], [0, 1, Fraction(1, 3)], [1, 0, 1]])
    assert m.is_invertible()
    assert m @ m.inverse() == Matrix.identity(3)
    assert not Matrix.from_rows([[1, 2], [2, 4]]).is_invertible()


def test_subspace_lattice_operations():
    U = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    W = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    assert (U + W).is_full()
    assert U.intersect(W) == Subspace.span([[0, 1, 0]], 3)
    assert Subspace.span([[0, 2, 0]], 3) <= U
    assert U.coords([3, 5, 0]) == (3, 5)
    assert not U.contains([0, 0, 1])


def test_quotient_presentation_section_and_projection():
    R = Subspace.span([[1, -1, 0, 0], [0, 0, 1, 1]], 4)
    Q = quotient(4, R)
    assert Q.dim == 2
    assert Q.projection @ Q.section == Matrix.identity(2)
    assert Q.in_relations([2, -2, 1, 1])
    assert Q.project([1, -1, 0, 0]) == (0, 0)
    # the complement is the non-pivot columns of the RREF
    assert Q.complement == (1, 3)


def test_close_under_finds_invariant_subspace():
    shift = Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    S = close_under(Subspace.span([[1, 0, 0]], 3), [shift])
    assert S.is_full()
    T = close_under(Subspace.span([[0, 0, 1]], 3), [shift])
    assert T.rank == 1


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        Matrix.from_rows([[1.0, 0]])
    assert scalar("3/6") == Fraction(1, 2)
    assert json_scalar(Fraction(4, 2)) == 2
    assert json_scalar(Fraction(-1, 3)) == "-1/3"
