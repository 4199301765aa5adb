"""Builders for concrete Lie-Rinehart algebras and extensions.

Covers base algebras (rationals, dual numbers, split algebra), Lie algebras
over K, the transformation algebra ``A (x) g``, the Atiyah algebra of a
module, semidirect products, fiber products, pullbacks of central
extensions, and the builtin corpus used by the tests and the CLI.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    CommAlgebra, LieRinehartAlgebra, LRMorphism, Violation, bilinear, commutator_matrix,
    derivation_violations, derivations_of, induced_on_subspace, require_valid, tensor3,
    validate_lr,
)
from .exactlin import (
    ZERO, Matrix, Subspace, hstack, kernel, unit_vec, vadd, vec, vstack,
    vsub, zero_vec,
)

# ---------------------------------------------------------------- base algebras


def rationals() -> CommAlgebra:
    return CommAlgebra.create(1, [1], [[[1]]], augmentation=[1], name="rationals")


def dual_numbers() -> CommAlgebra:
    """``Q[eps]/(eps^2)`` with basis (1, eps)."""
    return CommAlgebra.create(2, [1, 0], [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
                              augmentation=[1, 0], name="dual_numbers")


def split_algebra() -> CommAlgebra:
    """``Q x Q`` with its two orthogonal idempotents as basis."""
    return CommAlgebra.create(2, [1, 1], [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
                              augmentation=[1, 0], name="split2")


BASES = {"rationals": rationals, "dual_numbers": dual_numbers, "split2": split_algebra}


def base_algebra(name: str) -> CommAlgebra:
    try:
        return BASES[name]()
    except KeyError:
        raise ValueError(f"unknown base algebra {name!r}; known: {sorted(BASES)}") from None


# ---------------------------------------------------------------- Lie algebras over K


@dataclass(frozen=True)
class LieAlgebraOverK:
    dim: int
    bracket: tuple
    name: str = ""
    labels: tuple = ()

    @classmethod
    def create(cls, dim, bracket, name="", labels=()) -> "LieAlgebraOverK":
        return cls(dim, tensor3(bracket), name, tuple(labels))

    @classmethod
    def from_relations(cls, labels: Sequence[str], rels: dict, name="") -> "LieAlgebraOverK":
        """``rels[(i, j)] = {k: c}`` gives ``[x_i, x_j]``; antisymmetry is filled in."""
        n = len(labels)
        br = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), out in rels.items():
            for k, c in out.items():
                br[i][j][k] += Fraction(c)
                br[j][i][k] -= Fraction(c)
        return cls.create(n, br, name, labels)

    def br(self, x, y):
        return bilinear(self.bracket, x, y, self.dim)

    def ad(self, i: int) -> Matrix:
        return Matrix.from_columns([self.bracket[i][j] for j in range(self.dim)], self.dim)


def validate_lie(g: LieAlgebraOverK) -> list:
    n = g.dim
    rep = []
    e = [unit_vec(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            if any(x + y for x, y in zip(g.bracket[i][j], g.bracket[j][i])):
                rep.append(Violation("bracket.antisymmetry", (i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = vadd(vadd(g.br(e[i], g.bracket[j][k]), g.br(e[j], g.bracket[k][i])),
                         g.br(e[k], g.bracket[i][j]))
                if any(s):
                    rep.append(Violation("bracket.jacobi", (i, j, k)))
    return rep


def sl2() -> LieAlgebraOverK:
    # basis h, e, f
    return LieAlgebraOverK.from_relations(
        ("h", "e", "f"), {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, "sl2")


def heisenberg() -> LieAlgebraOverK:
    return LieAlgebraOverK.from_relations(("x", "y", "z"), {(0, 1): {2: 1}}, "heisenberg")


def abelian_lie(n: int) -> LieAlgebraOverK:
    return LieAlgebraOverK.from_relations(tuple(f"x{i}" for i in range(n)), {}, f"abelian({n})")


def sl2_two_doublets() -> LieAlgebraOverK:
    """``sl2`` acting on two copies of its 2-dimensional irreducible module.

    Basis h, e, f, v1, v2, w1, w2 with e v2 = v1, f v1 = v2, h v1 = v1,
    h v2 = -v2 (same for w).  Perfect, centreless, with a 3-dimensional
    second homology: the natural example with room for proper coverings.
    """
    rels = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
    for v1, v2 in ((3, 4), (5, 6)):
        rels[(0, v1)] = {v1: 1}
        rels[(0, v2)] = {v2: -1}
        rels[(1, v2)] = {v1: 1}
        rels[(2, v1)] = {v2: 1}
    return LieAlgebraOverK.from_relations(("h", "e", "f", "v1", "v2", "w1", "w2"), rels, "sl2_2v2")


def lie_algebra(name: str) -> LieAlgebraOverK:
    name = name.strip()
    m = re.fullmatch(r"abelian\(?(\d+)\)?", name)
    if m:
        return abelian_lie(int(m.group(1)))
    table = {"sl2": sl2, "heisenberg": heisenberg, "sl2_2v2": sl2_two_doublets}
    if name not in table:
        raise ValueError(f"unknown Lie algebra {name!r}")
    return table[name]()


# ---------------------------------------------------------------- LR builders


def lie_as_lr(g: LieAlgebraOverK, base: CommAlgebra | None = None, character=None) -> LieRinehartAlgebra:
    """``g`` as a Lie-Rinehart algebra with zero anchor, A acting through a character."""
    A = base or rationals()
    chi = A.augmentation if character is None else vec(character)
    if chi is None:
        raise ValueError("base has no augmentation; pass a character")
    n = g.dim
    a_action = tuple(tuple(tuple(chi[i] if k == j else ZERO for k in range(n)) for j in range(n))
                     for i in range(A.dim))
    anchor = tuple(Matrix.zeros(A.dim, A.dim) for _ in range(n))
    name = g.name if A.dim == 1 else f"{g.name}@{A.name}"
    L = LieRinehartAlgebra(A, n, a_action, g.bracket, anchor, name, g.labels)
    require_valid(validate_lr(L), f"{name} is not a Lie-Rinehart algebra")
    return L


def validate_gamma(g: LieAlgebraOverK, A: CommAlgebra, gamma: Sequence[Matrix]) -> list:
    rep = []
    if len(gamma) != g.dim:
        return [Violation("gamma.shape")]
    for j, D in enumerate(gamma):
        if D.shape != (A.dim, A.dim) or derivation_violations(A, D):
            rep.append(Violation("gamma.derivation", (j,)))
    if rep:
        return rep
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = Matrix.zeros(A.dim, A.dim)
            for k, c in enumerate(g.bracket[i][j]):
                if c:
                    lhs = lhs + gamma[k].scale(c)
            if lhs != commutator_matrix(gamma[i], gamma[j]):
                rep.append(Violation("gamma.lie_map", (i, j)))
    return rep


def transformation_algebra(g: LieAlgebraOverK, A: CommAlgebra, gamma: Sequence[Matrix] | None = None,
                           name: str = "") -> LieRinehartAlgebra:
    """``A (x) g`` for a Lie map ``gamma: g -> Der(A)``; basis index ``i*dim g + j`` is ``a_i (x) g_j``."""
    if gamma is None:
        gamma = [Matrix.zeros(A.dim, A.dim)] * g.dim
    gamma = [D if isinstance(D, Matrix) else Matrix.from_rows(D, A.dim) for D in gamma]
    require_valid(validate_gamma(g, A, gamma), "gamma is not a Lie map into Der(A)")
    dA, dg = A.dim, g.dim
    n = dA * dg
    idx = lambda i, j: i * dg + j

    def emb(a: Sequence, j: int):
        out = [ZERO] * n
        for i, c in enumerate(a):
            if c:
                out[idx(i, j)] += c
        return out

    a_action = []
    for k in range(dA):
        row = []
        for i in range(dA):
            for j in range(dg):
                row.append(tuple(emb(A.mult[k][i], j)))
        a_action.append(tuple(row))
    bracket = [[None] * n for _ in range(n)]
    for i in range(dA):
        for j in range(dg):
            for i2 in range(dA):
                for j2 in range(dg):
                    out = [ZERO] * n
                    aa = A.mult[i][i2]
                    for k, c in enumerate(g.bracket[j][j2]):
                        if c:
                            for l, x in enumerate(aa):
                                if x:
                                    out[idx(l, k)] += c * x
                    t2 = A.mul(A.basis(i), gamma[j].column(i2))
                    t3 = A.mul(A.basis(i2), gamma[j2].column(i))
                    for l in range(dA):
                        out[idx(l, j2)] += t2[l]
                        out[idx(l, j)] -= t3[l]
                    bracket[idx(i, j)][idx(i2, j2)] = tuple(out)
    anchor = tuple(A.basis_mult[i] @ gamma[j] for i in range(dA) for j in range(dg))
    labels = tuple(f"{'1' if i == 0 else f'a{i}'}*{g.labels[j] if g.labels else j}"
                   for i in range(dA) for j in range(dg))
    L = LieRinehartAlgebra(A, n, tuple(a_action), tuple(tuple(r) for r in bracket), anchor,
                           name or f"{A.name}(x){g.name}", labels)
    require_valid(validate_lr(L), "transformation algebra failed validation")
    return L


def der_algebra(A: CommAlgebra) -> LieRinehartAlgebra:
    """``Der_K(A)`` with the commutator bracket and the identity anchor."""
    d = A.dim
    S = Subspace.span([D.flat() for D in derivations_of(A)], d * d)
    unflat = lambda v: Matrix.unflatten(v, d, d)
    L = induced_on_subspace(
        A, S,
        br=lambda u, v: commutator_matrix(unflat(u), unflat(v)).flat(),
        act=lambda i, u: (A.basis_mult[i] @ unflat(u)).flat(),
        anchor=unflat, name=f"Der({A.name})")
    require_valid(validate_lr(L), "Der(A) failed validation")
    return L


def module_algebra(A: CommAlgebra, dim: int, a_action) -> LieRinehartAlgebra:
    """An A-module viewed as an abelian Lie A-algebra (zero bracket, zero anchor)."""
    a_action = tensor3(a_action)
    br = tuple(tuple(zero_vec(dim) for _ in range(dim)) for _ in range(dim))
    anchor = tuple(Matrix.zeros(A.dim, A.dim) for _ in range(dim))
    return LieRinehartAlgebra(A, dim, a_action, br, anchor, "module")


def regular_module(A: CommAlgebra) -> tuple:
    """``(dim, a_action)`` of A acting on itself."""
    return A.dim, A.mult


def free_module(A: CommAlgebra, rank: int) -> tuple:
    d = A.dim
    n = d * rank
    a_action = []
    for i in range(d):
        row = []
        for r in range(rank):
            for j in range(d):
                out = [ZERO] * n
                for k, c in enumerate(A.mult[i][j]):
                    out[r * d + k] = c
                row.append(tuple(out))
        a_action.append(tuple(row))
    return n, tuple(a_action)


def abelian_lr(A: CommAlgebra, n: int) -> LieRinehartAlgebra:
    """Free A-module of rank ``n`` with zero bracket and zero anchor."""
    dim, act = free_module(A, n)
    L = module_algebra(A, dim, act)
    return LieRinehartAlgebra(A, dim, L.a_action, L.bracket, L.anchor, f"abelian({n})")


def validate_lr_action(L: LieRinehartAlgebra, R: LieRinehartAlgebra, action) -> list:
    """Axioms for an action of L on a Lie A-algebra R (``action[x][r] = x o r``)."""
    A = L.base
    rep = []
    if not R.has_zero_anchor:
        rep.append(Violation("action.target_anchor", (), "R must be a Lie A-algebra"))
    act = lambda x, r: bilinear(action, x, r, R.dim)
    eL = [L.basis(i) for i in range(L.dim)]
    eR = [R.basis(i) for i in range(R.dim)]
    for x in range(L.dim):
        for y in range(x + 1, L.dim):
            for r in range(R.dim):
                lhs = act(L.bracket[x][y], eR[r])
                rhs = vsub(act(eL[x], action[y][r]), act(eL[y], action[x][r]))
                if lhs != rhs:
                    rep.append(Violation("action.lie", (x, y, r)))
    for x in range(L.dim):
        for r in range(R.dim):
            for s in range(r + 1, R.dim):
                lhs = act(eL[x], R.bracket[r][s])
                rhs = vsub(R.br(action[x][r], eR[s]), R.br(action[x][s], eR[r]))
                if lhs != rhs:
                    rep.append(Violation("action.derivation", (x, r, s)))
    for a in range(A.dim):
        for x in range(L.dim):
            for r in range(R.dim):
                if act(L.a_action[a][x], eR[r]) != R.a_ops[a].apply(action[x][r]):
                    rep.append(Violation("action.a_linear", (a, x, r)))
                rhs = vadd(R.a_ops[a].apply(action[x][r]), R.act(L.anchor[x].column(a), eR[r]))
                if act(eL[x], R.a_action[a][r]) != rhs:
                    rep.append(Violation("action.leibniz", (a, x, r)))
    return rep


def semidirect(L: LieRinehartAlgebra, R: LieRinehartAlgebra, action, name: str = "") -> LieRinehartAlgebra:
    """``L x| R`` on ``L (+) R`` (L coordinates first)."""
    action = tensor3(action)
    require_valid(validate_lr_action(L, R, action), "invalid action for the semidirect product")
    n, r = L.dim, R.dim
    N = n + r
    split = lambda v: (v[:n], v[n:])

    def br(u, v):
        x, p = split(u)
        y, q = split(v)
        top = L.br(x, y)
        bot = vadd(R.br(p, q), vsub(bilinear(action, x, q, r), bilinear(action, y, p, r)))
        return top + bot

    def act(i, u):
        x, p = split(u)
        return L.a_ops[i].apply(x) + R.a_ops[i].apply(p)

    e = [unit_vec(N, i) for i in range(N)]
    a_action = tuple(tuple(act(i, u) for u in e) for i in range(L.base.dim))
    bracket = tuple(tuple(br(u, v) for v in e) for u in e)
    anchor = tuple(L.anchor) + tuple(Matrix.zeros(L.base.dim, L.base.dim) for _ in range(r))
    S = LieRinehartAlgebra(L.base, N, a_action, bracket, anchor, name or f"{L.name}x|{R.name}")
    require_valid(validate_lr(S), "semidirect product failed validation")
    return S


def fiber_product(L: LieRinehartAlgebra, M: LieRinehartAlgebra, extra: Matrix | None = None,
                  name: str = "") -> tuple:
    """``L x_Der M = {(l, m) : alpha(l) = alpha(m)}`` and its two projections.

    ``extra`` is an optional matrix on ``L (+) M`` whose kernel is intersected
    in (used by pullbacks).
    """
    if L.base != M.base:
        raise ValueError("fiber product needs a common base")
    n, m = L.dim, M.dim
    cons = hstack(L.anchor_flat, M.anchor_flat.scale(-1))
    if extra is not None:
        cons = vstack(cons, extra)
    S = kernel(cons)
    split = lambda v: (v[:n], v[n:])
    P = induced_on_subspace(
        L.base, S,
        br=lambda u, v: L.br(u[:n], v[:n]) + M.br(u[n:], v[n:]),
        act=lambda i, u: L.a_ops[i].apply(u[:n]) + M.a_ops[i].apply(u[n:]),
        anchor=lambda u: L.anchor_of(u[:n]),
        name=name or f"{L.name}x{M.name}")
    require_valid(validate_lr(P), "fiber product failed validation")
    inc = S.inclusion()
    pL = Matrix(n, S.rank, inc.entries[:n])
    pM = Matrix(m, S.rank, inc.entries[n:])
    del split
    return P, LRMorphism(P, L, pL), LRMorphism(P, M, pM)


def product(L: LieRinehartAlgebra, M: LieRinehartAlgebra, name: str = "") -> tuple:
    """Product in the category of LR algebras (the fiber product over Der(A))."""
    return fiber_product(L, M, name=name)


def transport(L: LieRinehartAlgebra, T: Matrix, name: str = "") -> LieRinehartAlgebra:
    """The algebra making the invertible matrix ``T`` an isomorphism out of ``L``."""
    Ti = T.inverse()
    n = L.dim
    e = [unit_vec(n, i) for i in range(n)]
    pre = [Ti.apply(u) for u in e]
    a_action = tuple(tuple(T.apply(L.a_ops[i].apply(p)) for p in pre) for i in range(L.base.dim))
    bracket = tuple(tuple(T.apply(L.br(p, q)) for q in pre) for p in pre)
    anchor = tuple(L.anchor_of(p) for p in pre)
    return LieRinehartAlgebra(L.base, n, a_action, bracket, anchor, name or L.name)


def trivial_central_product(E: LieRinehartAlgebra, module: tuple, name: str = "") -> tuple:
    """``E x K`` for an A-module ``K`` (zero bracket), anchor taken from E.

    With ``K = E/{E,E}`` this detects perfectness through splittings; any K
    works when the anchor of E acts trivially on it, which ``validate_lr``
    confirms.  Returns the algebra and the projection.
    """
    kdim, kact = module
    K = module_algebra(E.base, kdim, kact)
    n, N = E.dim, E.dim + kdim
    e = [unit_vec(N, i) for i in range(N)]
    a_action = tuple(tuple(E.a_ops[i].apply(u[:n]) + K.a_ops[i].apply(u[n:]) for u in e)
                     for i in range(E.base.dim))
    bracket = tuple(tuple(E.br(u[:n], v[:n]) + zero_vec(kdim) for v in e) for u in e)
    anchor = tuple(E.anchor) + tuple(Matrix.zeros(E.base.dim, E.base.dim) for _ in range(kdim))
    P = LieRinehartAlgebra(E.base, N, a_action, bracket, anchor, name or f"{E.name}x{kdim}")
    require_valid(validate_lr(P), "central product failed validation")
    proj = Matrix(n, N, tuple(r + (ZERO,) * kdim for r in Matrix.identity(n).entries))
    return P, LRMorphism(P, E, proj)


def atiyah_algebra(A: CommAlgebra, module: tuple) -> LieRinehartAlgebra:
    """Pairs ``(f, D)`` with ``f(a m) = a f(m) + D(a) m``; anchor ``(f, D) -> D``.

    Ambient coordinates: ``End_K(M)`` flattened, then ``End_K(A)`` flattened.
    """
    dm, mact = module
    mact = tensor3(mact)
    d = A.dim
    N = dm * dm + d * d
    F = lambda r, c: r * dm + c
    Dc = lambda r, c: dm * dm + r * d + c
    eqs = []
    # D is a derivation of A
    for i in range(d):
        for j in range(i, d):
            for out in range(d):
                row = [ZERO] * N
                for k, c in enumerate(A.mult[i][j]):
                    if c:
                        row[Dc(out, k)] += c
                for r in range(d):
                    if A.mult[i][r][out]:
                        row[Dc(r, j)] -= A.mult[i][r][out]
                    if A.mult[r][j][out]:
                        row[Dc(r, i)] -= A.mult[r][j][out]
                eqs.append(row)
    # f(a_i m_j) - a_i f(m_j) - D(a_i) m_j = 0
    for i in range(d):
        for j in range(dm):
            for out in range(dm):
                row = [ZERO] * N
                for k, c in enumerate(mact[i][j]):
                    if c:
                        row[F(out, k)] += c
                for r in range(dm):
                    c = mact[i][r][out]
                    if c:
                        row[F(r, j)] -= c
                for r in range(d):
                    c = mact[r][j][out]
                    if c:
                        row[Dc(r, i)] -= c
                eqs.append(row)
    S = kernel(Matrix.from_rows(eqs, N)) if eqs else Subspace.full(N)
    mops = [Matrix.from_columns([mact[i][m] for m in range(dm)], dm) for i in range(d)]

    def parts(u):
        return Matrix.unflatten(u[:dm * dm], dm, dm), Matrix.unflatten(u[dm * dm:], d, d)

    def br(u, v):
        f, D = parts(u)
        g, E = parts(v)
        return commutator_matrix(f, g).flat() + commutator_matrix(D, E).flat()

    def act(i, u):
        f, D = parts(u)
        return (mops[i] @ f).flat() + (A.basis_mult[i] @ D).flat()

    L = induced_on_subspace(A, S, br, act, lambda u: parts(u)[1], name=f"Atiyah({A.name},{dm})")
    require_valid(validate_lr(L), "Atiyah algebra failed validation")
    return L


# ---------------------------------------------------------------- central extensions


@dataclass(frozen=True)
class CentralExtensionWitness:
    p: LRMorphism
    kernel: Subspace
    report: tuple

    @property
    def is_central(self) -> bool:
        return not self.report

    def __bool__(self):
        return self.is_central


def central_witness(p: LRMorphism) -> CentralExtensionWitness:
    """Check ``Ker p`` lies in ``Z_A(E)``; offending (kernel, a, z) indices are reported."""
    if not p.is_surjective():
        raise ValueError("an extension must be surjective")
    E = p.source
    K = p.kernel()
    rep = []
    for k, v in enumerate(K.basis):
        for a in range(E.base.dim):
            av = E.a_ops[a].apply(v)
            for z in range(E.dim):
                if any(E.br(av, E.basis(z))):
                    rep.append(Violation("central.kernel_not_central", (k, a, z)))
    return CentralExtensionWitness(p, K, tuple(rep))


def pullback_extension(c: LRMorphism, f: LRMorphism) -> tuple:
    """``P = {(l, n) : f(l) = c(n)}`` with ``p_L: P -> L`` central and ``p_N: P -> N``."""
    if f.target.dim != c.target.dim or f.target.base != c.target.base:
        raise ValueError("f must land in the target of c")
    if not central_witness(c):
        raise ValueError("c is not a central extension")
    L, N = f.source, c.source
    extra = hstack(f.matrix, c.matrix.scale(-1))
    P, pL, pN = fiber_product(L, N, extra=extra, name=f"pullback({L.name})")
    return P, central_witness(pL), pN


# ---------------------------------------------------------------- builtins


def dual_numbers_lr() -> LieRinehartAlgebra:
    """A = Q[eps] as an LR algebra over itself: ``[c1 + c2 eps, c1' + c2' eps] = (c1 c2' - c2 c1') eps``.

    The anchor sends ``c1 + c2 eps`` to ``ad_{c1}``, i.e. ``1 -> (eps -> eps)``
    and ``eps -> 0``.
    """
    A = dual_numbers()
    bracket = [[[0, 0], [0, 1]], [[0, -1], [0, 0]]]
    anchor = [[[0, 0], [0, 1]], [[0, 0], [0, 0]]]
    L = LieRinehartAlgebra.create(A, 2, A.mult, bracket, anchor, "dual_numbers", ("1", "eps"))
    require_valid(validate_lr(L), "dual numbers")
    return L


def der_plus_a(A: CommAlgebra | None = None) -> LieRinehartAlgebra:
    """``Der(A) (+) A`` with ``[(D,a),(D',a')] = ([D,D'], D(a') - D'(a))``."""
    A = A or dual_numbers()
    D = der_algebra(A)
    R = module_algebra(A, *regular_module(A))
    action = tuple(tuple(D.anchor[k].column(j) for j in range(A.dim)) for k in range(D.dim))
    return semidirect(D, R, action, name=f"Der+A({A.name})")


def builtin(name: str) -> LieRinehartAlgebra:
    name = re.sub(r"\s+", "", name)
    m = re.fullmatch(r"abelian\(?(\d+)\)?", name)
    if m:
        return lie_as_lr(abelian_lie(int(m.group(1))))
    m = re.fullmatch(r"transformation\((\w+),(\w+),0\)", name)
    if m:
        return transformation_algebra(lie_algebra(m.group(1)), base_algebra(m.group(2)))
    if name == "dual_numbers":
        return dual_numbers_lr()
    if name == "der_plus_a":
        return der_plus_a()
    if name in ("sl2", "heisenberg", "sl2_2v2"):
        return lie_as_lr(lie_algebra(name))
    if name == "sl2_dual":
        return transformation_algebra(sl2(), dual_numbers())
    if name == "sl2xsl2":
        s = lie_as_lr(sl2())
        return product(s, s, name="sl2xsl2")[0]
    if name == "sl2@dual_numbers":
        return lie_as_lr(sl2(), dual_numbers())
    raise ValueError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


BUILTIN_NAMES = (
    "dual_numbers", "der_plus_a", "sl2", "heisenberg", "abelian(2)", "abelian(3)",
    "transformation(sl2,dual_numbers,0)", "sl2xsl2", "sl2_2v2", "sl2@dual_numbers",
)


def chevalley_involution() -> Matrix:
    """``e -> -f, f -> -e, h -> -h`` on sl2 (basis h, e, f)."""
    return Matrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])


def exp_nilpotent(N: Matrix, t=1) -> Matrix:
    """``exp(t N)`` for nilpotent ``N``, exactly."""
    n = N.rows
    out = Matrix.identity(n)
    term = Matrix.identity(n)
    k = 1
    while True:
        term = (term @ N).scale(Fraction(t) / k)
        if term.is_zero():
            return out
        out = out + term
        k += 1
        if k > n + 1:
            raise ValueError("matrix is not nilpotent")


def is_nilpotent(N: Matrix) -> bool:
    P = N
    for _ in range(N.rows):
        P = P @ N
    return P.is_zero()
