"""Derivations of Lie-Rinehart algebras and lifting along coverings.

A covering ``f: L' -> L`` yields the isomorphism ``F = uce_A(f)`` between
the two universal central extensions and the subspace
``C = F(Ker uce_{L'})`` of ``uce_A(L)``.  Automorphisms (derivations) of L
lift to L' exactly when ``uce_A(h)`` preserves C (``delta^uce`` maps C into C).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LieRinehartAlgebra, LRMorphism, Violation, commutator, commutator_matrix,
    derivation_violations, is_ideal, is_perfect, require_valid, validate_morphism,
)
from .constructions import central_witness, chevalley_involution, exp_nilpotent, product
from .exactlin import ZERO, Matrix, Subspace, image_of, json_scalar, kernel
from .uce import UceAlgebra, WellDefinednessError, build_uce, linear_section, uce_on_morphism, universal_lift

# ---------------------------------------------------------------- derivations


@dataclass(frozen=True)
class DerivationPair:
    """``(delta, delta0)`` with ``delta`` on L and ``delta0`` a derivation of A."""

    delta: Matrix
    delta0: Matrix

    def bracket(self, other: "DerivationPair") -> "DerivationPair":
        return DerivationPair(commutator_matrix(self.delta, other.delta),
                              commutator_matrix(self.delta0, other.delta0))

    def flat(self) -> tuple:
        return self.delta.flat() + self.delta0.flat()

    def __add__(self, other):
        return DerivationPair(self.delta + other.delta, self.delta0 + other.delta0)

    def scale(self, c) -> "DerivationPair":
        return DerivationPair(self.delta.scale(c), self.delta0.scale(c))

    @classmethod
    def zero(cls, L: LieRinehartAlgebra) -> "DerivationPair":
        return cls(Matrix.zeros(L.dim, L.dim), Matrix.zeros(L.base.dim, L.base.dim))

    @classmethod
    def inner(cls, L: LieRinehartAlgebra, x) -> "DerivationPair":
        """``(ad x, alpha(x))``."""
        ad = Matrix.from_columns([L.br(x, L.basis(j)) for j in range(L.dim)], L.dim)
        return cls(ad, L.anchor_of(x))


def validate_derivation(L: LieRinehartAlgebra, D: DerivationPair) -> list:
    n, A = L.dim, L.base
    rep = []
    if D.delta.shape != (n, n) or D.delta0.shape != (A.dim, A.dim):
        return [Violation("derivation.shape")]
    if derivation_violations(A, D.delta0):
        rep.append(Violation("derivation.delta0", (), "delta0 is not a derivation of A"))
    d = D.delta
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d.apply(L.bracket[i][j])
            rhs = [x + y for x, y in zip(L.br(d.column(i), L.basis(j)), L.br(L.basis(i), d.column(j)))]
            if list(lhs) != rhs:
                rep.append(Violation("derivation.lie", (i, j)))
    for l in range(A.dim):
        for j in range(n):
            lhs = d.apply(L.a_action[l][j])
            rhs = [x + y for x, y in zip(L.a_ops[l].apply(d.column(j)), L.act(D.delta0.column(l), L.basis(j)))]
            if list(lhs) != rhs:
                rep.append(Violation("derivation.a_leibniz", (l, j)))
    for j in range(n):
        if L.anchor_of(d.column(j)) != commutator_matrix(D.delta0, L.anchor[j]):
            rep.append(Violation("derivation.anchor", (j,)))
    return rep


def rinehart_derivations(L: LieRinehartAlgebra) -> list:
    """Basis of ``Der_Rin(L)``, solved jointly over ``(delta, delta0)``."""
    n, A = L.dim, L.base
    dA = A.dim
    N = n * n + dA * dA
    D = lambda r, c: r * n + c          # delta[r][c]
    E = lambda r, c: n * n + r * dA + c  # delta0[r][c]
    rows = []
    # delta0 is a derivation of A
    for i in range(dA):
        for j in range(i, dA):
            for out in range(dA):
                row = [ZERO] * N
                for k, c in enumerate(A.mult[i][j]):
                    row[E(out, k)] += c
                for r in range(dA):
                    row[E(r, j)] -= A.mult[i][r][out]
                    row[E(r, i)] -= A.mult[r][j][out]
                rows.append(row)
    # Lie derivation
    for i in range(n):
        for j in range(i + 1, n):
            for out in range(n):
                row = [ZERO] * N
                for k, c in enumerate(L.bracket[i][j]):
                    row[D(out, k)] += c
                for r in range(n):
                    row[D(r, i)] -= L.bracket[r][j][out]
                    row[D(r, j)] -= L.bracket[i][r][out]
                rows.append(row)
    # delta(a x) = a delta(x) + delta0(a) x
    for l in range(dA):
        for j in range(n):
            for out in range(n):
                row = [ZERO] * N
                for k, c in enumerate(L.a_action[l][j]):
                    row[D(out, k)] += c
                for r in range(n):
                    row[D(r, j)] -= L.a_action[l][r][out]
                for r in range(dA):
                    row[E(r, l)] -= L.a_action[r][j][out]
                rows.append(row)
    # alpha(delta x_j) = delta0 alpha(x_j) - alpha(x_j) delta0
    for j in range(n):
        Aj = L.anchor[j]
        for p in range(dA):
            for q in range(dA):
                row = [ZERO] * N
                for r in range(n):
                    row[D(r, j)] += L.anchor[r].entries[p][q]
                for r in range(dA):
                    row[E(p, r)] -= Aj.entries[r][q]
                    row[E(r, q)] += Aj.entries[p][r]
                rows.append(row)
    sol = kernel(Matrix.from_rows(rows, N))
    out = []
    for v in sol.basis:
        pair = DerivationPair(Matrix.unflatten(v[:n * n], n, n), Matrix.unflatten(v[n * n:], dA, dA))
        require_valid(validate_derivation(L, pair), "solved derivation failed validation")
        out.append(pair)
    return out


def derivation_span(pairs) -> Subspace:
    pairs = list(pairs)
    if not pairs:
        return Subspace.zero(0)
    return Subspace.span([p.flat() for p in pairs], len(pairs[0].flat()))


def derivations_closed(L: LieRinehartAlgebra, basis=None) -> bool:
    basis = basis if basis is not None else rinehart_derivations(L)
    if not basis:
        return True
    S = derivation_span(basis)
    return all(S.contains(D.bracket(E).flat()) for D in basis for E in basis)


def uce_derivation(D: DerivationPair, L: LieRinehartAlgebra, U: UceAlgebra | None = None) -> DerivationPair:
    """``delta^uce(a, x, y) = (delta0 a, x, y) + (a, delta x, y) + (a, x, delta y)``."""
    require_valid(validate_derivation(L, D), "not a derivation")
    U = U or build_uce(L)
    amb, Q, A = U._amb, U.presentation, L.base
    d = D.delta

    def image_of_tensor(t: int) -> dict:
        i, j, k = amb.split(t)
        out: dict = {}
        amb.tensor(D.delta0.column(i), L.basis(j), L.basis(k), out)
        amb.tensor(A.basis(i), d.column(j), L.basis(k), out)
        amb.tensor(A.basis(i), L.basis(j), d.column(k), out)
        return out

    for r in Q._echelon.rows.values():
        acc: dict = {}
        for t, x in r.items():
            for c, y in image_of_tensor(t).items():
                acc[c] = acc.get(c, ZERO) + x * y
        if not Q.in_relations_sparse({c: v for c, v in acc.items() if v}):
            raise WellDefinednessError("delta^uce does not preserve M_A L")
    mat = Matrix.from_columns([Q.project_sparse(image_of_tensor(t)) for t in Q.complement], U.dim)
    out = DerivationPair(mat, D.delta0)
    require_valid(validate_derivation(U.algebra, out), "delta^uce failed validation")
    u = U.uce_morphism.matrix
    if u @ mat != d @ u:
        raise AssertionError("delta^uce does not commute with uce")
    return out


# ---------------------------------------------------------------- coverings


@dataclass(frozen=True)
class Covering:
    f: LRMorphism
    uce_source: UceAlgebra
    uce_target: UceAlgebra
    frak: LRMorphism      # uce_A(f), an isomorphism
    frak_inv: Matrix
    C: Subspace           # frak(Ker uce'), inside uce_A(L)
    pi: Matrix            # uce' o frak^{-1}: uce_A(L) -> L'
    pi_section: Matrix


def make_covering(f: LRMorphism) -> Covering:
    """Validate ``f`` as a covering and compute ``C`` and ``pi``."""
    Lp, L = f.source, f.target
    require_valid(validate_morphism(f), "covering map is not a morphism")
    if not central_witness(f):
        raise ValueError("covering map is not central")
    if not is_perfect(Lp):
        raise ValueError("covering source is not perfect")
    Us, Ut = build_uce(Lp), build_uce(L)
    frak = uce_on_morphism(f, Us, Ut)
    lifted = universal_lift(f, Ut.uce_morphism, Us)
    if lifted.matrix != frak.matrix:
        raise AssertionError("uce_A(f) differs from the universal lift")
    if not frak.matrix.is_invertible():
        raise AssertionError("uce_A(f) is not invertible")
    inv = frak.matrix.inverse()
    C = image_of(frak.matrix, Us.kernel)
    pi = Us.uce_morphism.matrix @ inv
    if kernel(pi) != C:
        raise AssertionError("kernel of uce' o F^{-1} differs from C")
    sec = linear_section(LRMorphism(Ut.algebra, Lp, pi))
    return Covering(f, Us, Ut, frak, inv, C, pi, sec)


@dataclass(frozen=True)
class LiftResult:
    lifted: bool
    lift: object = None         # LRMorphism or DerivationPair
    witness: tuple | None = None

    def to_dict(self) -> dict:
        out = {"lifted": self.lifted}
        if self.witness is not None:
            out["witness"] = [json_scalar(x) for x in self.witness]
        if self.lift is not None:
            m = self.lift.matrix if isinstance(self.lift, LRMorphism) else self.lift.delta
            out["lift_matrix"] = [[json_scalar(x) for x in r] for r in m.entries]
        return out


def _witness(moved: Subspace, C: Subspace):
    for v in moved.basis:
        if not C.contains(v):
            return v
    for v in C.basis:
        if not moved.contains(v):
            return v
    return None


def lift_automorphism(cov: Covering, h: LRMorphism) -> LiftResult:
    """Lift ``h in Aut(L)`` to ``h'`` with ``f h' = h f``, or refuse with a witness."""
    L = cov.f.target
    if h.source is not L and h.source != L:
        raise ValueError("h must be an endomorphism of the covering target")
    if not h.matrix.is_invertible():
        raise ValueError("h is not invertible")
    require_valid(validate_morphism(h), "h is not a morphism")
    uh = uce_on_morphism(h, cov.uce_target, cov.uce_target)
    moved = image_of(uh.matrix, cov.C)
    if moved != cov.C:
        return LiftResult(False, witness=_witness(moved, cov.C))
    hp = cov.pi @ uh.matrix @ cov.pi_section
    Lp = cov.f.source
    g = LRMorphism(Lp, Lp, hp)
    require_valid(validate_morphism(g), "lifted map is not a morphism")
    if cov.f.matrix @ hp != h.matrix @ cov.f.matrix:
        raise AssertionError("lift does not cover h")
    K = cov.f.kernel()
    if image_of(hp, K) != K:
        raise AssertionError("lift does not preserve Ker f")
    return LiftResult(True, lift=g)


def lift_derivation(cov: Covering, D: DerivationPair) -> LiftResult:
    """Lift ``(delta, delta0)`` along the covering, or refuse with a witness."""
    L = cov.f.target
    Du = uce_derivation(D, L, cov.uce_target)
    moved = image_of(Du.delta, cov.C)
    if not moved <= cov.C:
        return LiftResult(False, witness=_witness(moved, cov.C))
    dp = cov.pi @ Du.delta @ cov.pi_section
    lifted = DerivationPair(dp, D.delta0)
    require_valid(validate_derivation(cov.f.source, lifted), "lifted derivation failed validation")
    if cov.f.matrix @ dp != D.delta @ cov.f.matrix:
        raise AssertionError("lift does not cover delta")
    K = cov.f.kernel()
    if not image_of(dp, K) <= K:
        raise AssertionError("lifted derivation does not preserve Ker f")
    return LiftResult(True, lift=lifted)


def descend_automorphism(cov: Covering, g: LRMorphism) -> LRMorphism:
    """The ``h`` with ``f g = h f`` for an automorphism ``g`` of L' preserving ``Ker f``."""
    K = cov.f.kernel()
    if image_of(g.matrix, K) != K:
        raise ValueError("g does not preserve Ker f")
    s = linear_section(cov.f)
    h = cov.f.matrix @ g.matrix @ s
    L = cov.f.target
    out = LRMorphism(L, L, h)
    require_valid(validate_morphism(out), "descended map is not a morphism")
    return out


# ---------------------------------------------------------------- automorphism samples


def sl2_automorphism_sample(count: int = 10, seed: int = 0) -> list:
    """Torus elements and products of ``exp(t ad e)``, ``exp(t ad f)`` on sl2 (basis h, e, f)."""
    rng = random.Random(seed)
    ad_e = Matrix.from_rows([[0, 0, 1], [-2, 0, 0], [0, 0, 0]])
    ad_f = Matrix.from_rows([[0, -1, 0], [0, 0, 0], [2, 0, 0]])
    params = [Fraction(p, q) for p in range(-3, 4) if p for q in (1, 2, 3)]
    out = []
    while len(out) < count:
        kind = len(out) % 3
        t = rng.choice(params)
        if kind == 0:
            out.append(Matrix.from_rows([[1, 0, 0], [0, t, 0], [0, 0, 1 / t]]))
        elif kind == 1:
            out.append(exp_nilpotent(ad_e, t) @ exp_nilpotent(ad_f, rng.choice(params)))
        else:
            u = rng.choice(params)
            torus = Matrix.from_rows([[1, 0, 0], [0, u, 0], [0, 0, 1 / u]])
            out.append(exp_nilpotent(ad_f, t) @ exp_nilpotent(ad_e, rng.choice(params)) @ torus)
    return out


def doublet_mixing(a, b, c, d) -> Matrix:
    """Automorphism of ``sl2_2v2`` acting on the doublet multiplicity space by ``[[a, b], [c, d]]``."""
    a, b, c, d = map(Fraction, (a, b, c, d))
    if a * d - b * c == 0:
        raise ValueError("mixing matrix must be invertible")
    m = [[ZERO] * 7 for _ in range(7)]
    for i in range(3):
        m[i][i] = Fraction(1)
    for k in range(2):
        v, w = 3 + k, 5 + k
        m[v][v], m[w][v] = a, c
        m[v][w], m[w][w] = b, d
    return Matrix.from_rows(m)


# ---------------------------------------------------------------- split sequences


@dataclass
class SplitUceReport:
    hypotheses: bool
    sum_is_everything: bool
    phi_image_is_ideal: bool
    phi_image_is_kernel_of_gamma: bool
    kernel_decomposes: bool
    direct_product: bool
    product_iso: bool | None
    dims: dict

    @property
    def ok(self) -> bool:
        flags = [self.hypotheses, self.sum_is_everything, self.phi_image_is_ideal,
                 self.phi_image_is_kernel_of_gamma, self.kernel_decomposes]
        if self.product_iso is not None:
            flags.append(self.product_iso)
        return all(flags)


def split_uce_check(f: LRMorphism, g: LRMorphism, s: LRMorphism) -> SplitUceReport:
    """Universal central extension of a split exact sequence ``L -f-> M -g-> N`` with section ``s``."""
    L, M, N = f.source, f.target, g.target
    for m in (f, g, s):
        require_valid(validate_morphism(m), "sequence map is not a morphism")
    if not (g.matrix @ s.matrix == Matrix.identity(N.dim)):
        raise ValueError("s is not a section of g")
    if not (f.is_injective() and g.is_surjective() and f.image() == g.kernel()):
        raise ValueError("sequence is not exact")
    if not all(is_perfect(X) for X in (L, M, N)):
        raise ValueError("all three algebras must be perfect")
    UL, UM, UN = build_uce(L), build_uce(M), build_uce(N)
    phi = uce_on_morphism(f, UL, UM)
    gam = uce_on_morphism(g, UM, UN)
    sig = uce_on_morphism(s, UN, UM)
    P, S = phi.image(), sig.image()
    whole = (P + S).is_full()
    ideal = is_ideal(UM.algebra, P)
    ker_g = P == gam.kernel()
    KL = image_of(phi.matrix, UL.kernel)
    KN = image_of(sig.matrix, UN.kernel)
    decomposes = (KL + KN) == UM.kernel and KL.intersect(KN).rank == 0 and KL.rank + KN.rank == UM.kernel.rank
    fl, sn = f.image(), s.image()
    direct = commutator(M, fl, sn).rank == 0
    iso = None
    if direct:
        Prod, p1, p2 = product(UL.algebra, UN.algebra, name="uceLxuceN")
        mat = phi.matrix @ p1.matrix + sig.matrix @ p2.matrix
        m = LRMorphism(Prod, UM.algebra, mat)
        iso = not validate_morphism(m) and mat.rows == mat.cols and mat.is_invertible()
    dims = {"uce_L": UL.dim, "uce_M": UM.dim, "uce_N": UN.dim,
            "ker_L": UL.kernel.rank, "ker_M": UM.kernel.rank, "ker_N": UN.kernel.rank}
    return SplitUceReport(True, whole, ideal, ker_g, decomposes, direct, iso, dims)


__all__ = [
    "DerivationPair", "validate_derivation", "rinehart_derivations", "derivation_span",
    "derivations_closed", "uce_derivation", "Covering", "make_covering", "LiftResult",
    "lift_automorphism", "lift_derivation", "descend_automorphism", "sl2_automorphism_sample",
    "doublet_mixing", "chevalley_involution", "split_uce_check", "SplitUceReport",
]
