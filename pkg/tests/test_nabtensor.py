import pytest

from lierinehart.algebra import (
    AxiomError, LRMorphism, adjoint_module, center, commutator, quotient_algebra, subalgebra,
)
from lierinehart.constructions import (
    BUILTIN_NAMES, base_algebra, builtin, lie_algebra, lie_as_lr, product,
    transformation_algebra,
)
from lierinehart.exactlin import Matrix, solve_vec
from lierinehart.nabtensor import (
    ActionPair, bracket_actions, check_compatible, crossed_module_actions, factor_pairing, hat_tensor,
    inclusion_crossed_module, kernel_crossed_module, module_crossed_module, self_actions, symmetry_iso,
    tensor_exactness, tensor_product, trivial_action_iso, validate_action, validate_crossed_module,
    validate_pair, validate_pairing,
)

# dim L (x) L for the bracket self-action
SELF_DIMS = {
    "dual_numbers": 4, "der_plus_a": 10, "sl2": 3, "heisenberg": 6, "abelian(2)": 4, "abelian(3)": 9,
    "transformation(sl2,dual_numbers,0)": 12, "sl2xsl2": 6, "sl2_2v2": 10, "sl2@dual_numbers": 6,
}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_self_tensor_square(name):
    L = builtin(name)
    pair = self_actions(L)
    assert validate_pair(pair) == [] and check_compatible(pair) == []
    T = tensor_product(pair, check=True)
    assert T.dim == SELF_DIMS[name]
    assert T.anchor_triangle()
    assert T.mu.image() == commutator(L)
    if L.base.dim == 1:
        assert T.mu.kernel() <= center(T.algebra)


def test_plain_tensor_kernel_is_not_central_over_dual_numbers():
    # eps (x) [x, y] (x) [x', y'] lies in Ker mu but brackets nontrivially; the hat relations remove it
    L = builtin("sl2@dual_numbers")
    T = tensor_product(self_actions(L))
    assert not T.mu.kernel() <= center(T.algebra)
    H = hat_tensor(L)
    assert H.tensor.mu.kernel() <= center(H.tensor.algebra)


def test_heisenberg_square_matches_independent_count():
    # L (x) L ~ Gamma(L^ab) extended by H_2(L) and [L, L] for nilpotent class two
    L = builtin("heisenberg")
    ab = L.dim - commutator(L).rank
    gamma = ab * (ab + 1) // 2
    h2 = 2
    assert tensor_product(self_actions(L)).dim == gamma + h2 + commutator(L).rank


def test_abelian_tensor_is_ordinary_tensor():
    for m in (1, 2, 3):
        for k in (1, 2):
            L, M = builtin(f"abelian({m})"), builtin(f"abelian({k})")
            assert tensor_product(ActionPair.trivial(L, M)).dim == m * k


def test_mu_rank_over_dual_numbers():
    T = tensor_product(self_actions(builtin("sl2_dual")))
    assert T.mu.matrix.rank() == 6


def test_mutated_action_reports_compatibility_index():
    L = builtin("sl2")
    pair = self_actions(L)
    lm = [list(map(list, r)) for r in pair.l_on_m]
    lm[1][2] = [x * 2 for x in lm[1][2]]      # ^e f doubled
    bad = ActionPair(L, L, tuple(tuple(map(tuple, r)) for r in lm), pair.m_on_l)
    rep = check_compatible(bad)
    assert rep
    assert any(v.axiom.startswith("compatible.") and v.indices[:2] == (1, 2) for v in rep)
    with pytest.raises(AxiomError):
        tensor_product(bad)


def test_action_axioms_are_named():
    L = builtin("sl2")
    zero_on_self = ActionPair.trivial(L, L)
    assert validate_pair(zero_on_self) == []
    # zero actions satisfy every compatibility condition when the anchors vanish
    assert check_compatible(zero_on_self) == []
    assert tensor_product(zero_on_self).dim == 0
    # an anchored algebra cannot act trivially on a module with a nonzero anchor term
    D = builtin("dual_numbers")
    rep = validate_action(D, D, ActionPair.trivial(D, D).l_on_m)
    assert any(v.axiom == "action.module" for v in rep)


def test_ideal_in_product_via_bracket_actions():
    s = builtin("sl2")
    P, _, _ = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    pair = bracket_actions(i1, LRMorphism.identity(P))
    assert validate_pair(pair) == [] and check_compatible(pair) == []
    assert tensor_product(pair).dim == 3


def test_crossed_modules():
    s = builtin("sl2")
    P, p1, p2 = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    i2 = LRMorphism(s, P, Matrix.from_columns([P.basis(3 + i) for i in range(3)], 6))
    x1, x2 = inclusion_crossed_module(i1), inclusion_crossed_module(i2)
    for xm in (x1, x2, kernel_crossed_module(p2), module_crossed_module(adjoint_module(s))):
        assert validate_crossed_module(xm) == []
    # the two factors commute, so the induced actions are trivial and both are perfect
    assert tensor_product(crossed_module_actions(x1, x2)).dim == 0
    assert tensor_product(crossed_module_actions(x1, x1)).dim == 3


def test_broken_crossed_module_is_reported():
    s = builtin("sl2")
    xm = inclusion_crossed_module(LRMorphism.identity(s))
    bad = type(xm)(xm.R, xm.L, xm.boundary.scale(2), xm.action)
    names = {v.axiom for v in validate_crossed_module(bad)}
    assert "crossed.peiffer" in names or "crossed.lie_map" in names


def test_bracket_pairing_factors_through_mu():
    L = builtin("sl2")
    pair = self_actions(L)
    assert validate_pairing(pair, L, L.bracket) == []
    T = tensor_product(pair)
    fac = factor_pairing(T, L, L.bracket)
    assert fac.unique
    assert fac.morphism.matrix == T.mu.matrix


def test_canonical_pairing_fails_axiom_four_over_dual_numbers():
    # without the extra hat relations the generator pairing is not A-bilinear enough
    L = builtin("sl2_dual")
    pair = self_actions(L)
    T = tensor_product(pair)
    f = tuple(tuple(T.generator(j, k) for k in range(L.dim)) for j in range(L.dim))
    names = {v.axiom for v in validate_pairing(pair, T.algebra, f)}
    assert names == {"pairing.4"}
    H = hat_tensor(L).tensor
    fh = tuple(tuple(H.generator(j, k) for k in range(L.dim)) for j in range(L.dim))
    assert validate_pairing(pair, H.algebra, fh) == []


def test_canonical_pairing_holds_over_q():
    L = builtin("heisenberg")
    pair = self_actions(L)
    T = tensor_product(pair)
    f = tuple(tuple(T.generator(j, k) for k in range(L.dim)) for j in range(L.dim))
    assert validate_pairing(pair, T.algebra, f) == []


@pytest.mark.parametrize("name,rejected", [("sl2", (1,)), ("sl2_dual", (1,)), ("heisenberg", ()),
                                           ("dual_numbers", ())])
def test_symmetry_iso(name, rejected):
    rep = symmetry_iso(self_actions(builtin(name)))
    assert rep.sign == -1
    assert rep.rejected_signs == rejected
    assert rep.mutually_inverse


def test_symmetry_for_ideal_pair():
    s = builtin("sl2")
    P, _, _ = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    rep = symmetry_iso(bracket_actions(i1, LRMorphism.identity(P)))
    assert rep.sign == -1 and rep.mutually_inverse and 1 in rep.rejected_signs


def test_trivial_actions_give_abelianized_tensor():
    H, A2 = builtin("heisenberg"), builtin("abelian(2)")
    T = tensor_product(ActionPair.trivial(H, A2))
    assert T.dim == 4
    iso = trivial_action_iso(T)
    assert iso.shape == (4, 4) and iso.is_invertible()


def test_trivial_actions_over_dual_numbers():
    D = base_algebra("dual_numbers")
    L = lie_as_lr(lie_algebra("heisenberg"), D)
    M = transformation_algebra(lie_algebra("abelian(2)"), D)
    T = tensor_product(ActionPair.trivial(L, M))
    assert T.dim == 16
    iso = trivial_action_iso(T)
    assert iso.shape == (16, 16) and iso.is_invertible()


def test_module_tensor_surjects():
    L = builtin("sl2_dual")
    T = tensor_product(self_actions(L))
    assert T.module_tensor_map().rank() == T.dim


@pytest.mark.parametrize("name,dim", [("sl2", 3), ("sl2_dual", 6), ("sl2xsl2", 6), ("sl2@dual_numbers", 3)])
def test_hat_tensor_matches_uce(name, dim):
    H = hat_tensor(builtin(name))
    assert H.tensor.dim == H.uce.dim == dim
    assert H.central and H.mutually_inverse and H.kernels_match


def test_hat_tensor_needs_perfect_algebra():
    with pytest.raises(ValueError):
        hat_tensor(builtin("heisenberg"))


def _quotient_pair(H):
    """Pairs for Z -> H -> H/Z, all with P = H acting by brackets."""
    Z = center(H)
    Zs, inc = subalgebra(H, Z)
    N, q = quotient_algebra(H, Z)
    s = solve_vec
    pL = bracket_actions(inc, LRMorphism.identity(H))
    pM = self_actions(H)
    lift = lambda n: s(q.matrix, n)
    pN = ActionPair.from_functions(
        N, H,
        lambda n, p: H.br(lift(n), p),
        lambda p, n: q(H.br(p, lift(n))),
    )
    return inc, q, pL, pM, pN


def test_exactness_for_central_quotient_of_heisenberg():
    H = builtin("heisenberg")
    inc, q, pL, pM, pN = _quotient_pair(H)
    rep = tensor_exactness(inc, q, pL, pM, pN)
    assert rep.dims == {"L(x)P": 2, "M(x)P": 6, "N(x)P": 4}
    assert rep.exact


def test_exactness_for_split_product():
    s = builtin("sl2")
    P, _, p2 = product(s, s)
    i1 = LRMorphism(s, P, Matrix.from_columns([P.basis(i) for i in range(3)], 6))
    Q = builtin("sl2")
    # P' = sl2 acting through the second factor
    i2 = Matrix.from_columns([P.basis(3 + i) for i in range(3)], 6)
    pL = ActionPair.trivial(s, Q)
    pM = ActionPair.from_functions(P, Q, lambda x, m: Q.br(p2(x), m), lambda m, x: P.br(i2.apply(m), x))
    pN = self_actions(Q)
    rep = tensor_exactness(i1, p2, pL, pM, pN)
    assert rep.dims == {"L(x)P": 0, "M(x)P": 3, "N(x)P": 3}
    assert rep.exact


def test_exactness_rejects_non_exact_input():
    H = builtin("heisenberg")
    inc, q, pL, pM, pN = _quotient_pair(H)
    with pytest.raises(ValueError):
        tensor_exactness(LRMorphism.zero(pL.L, H), q, pL, pM, pN)
