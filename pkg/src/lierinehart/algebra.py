"""Commutative base algebras, Lie-Rinehart algebras, morphisms and modules.

All structures are stored as structure-constant tensors over the rationals.
Axioms are checked on basis instances only; by multilinearity that is
equivalent to checking them everywhere.  Validators return a list of
``Violation`` records (empty means valid) rather than a boolean.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .exactlin import (
    ZERO, Matrix, QuotientPresentation, Subspace, Vec, close_under, image, kernel,
    quotient, unit_vec, vec, vsub, zero_vec,
)


class AxiomError(ValueError):
    """Raised when a structure fails validation; carries the report."""

    def __init__(self, what: str, report: list):
        self.report = report
        head = ", ".join(str(v) for v in report[:3])
        more = f" (+{len(report) - 3} more)" if len(report) > 3 else ""
        super().__init__(f"{what}: {head}{more}")


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple = ()
    detail: str = ""

    def __str__(self):
        s = f"{self.axiom}{list(self.indices)}"
        return f"{s} {self.detail}" if self.detail else s

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "indices": list(self.indices), "detail": self.detail}


def require_valid(report: list, what: str):
    if report:
        raise AxiomError(what, report)


def bilinear(table, u: Sequence, v: Sequence, n: int) -> Vec:
    """``sum_ij u_i v_j table[i][j]`` for a table of length-``n`` vectors."""
    out = [ZERO] * n
    vnz = [(j, y) for j, y in enumerate(v) if y]
    for i, x in enumerate(u):
        if not x:
            continue
        row = table[i]
        for j, y in vnz:
            c = x * y
            for k, z in enumerate(row[j]):
                if z:
                    out[k] += c * z
    return tuple(out)


def tensor3(seq) -> tuple:
    return tuple(tuple(vec(v) for v in row) for row in seq)


# ---------------------------------------------------------------- base algebra


@dataclass(frozen=True)
class CommAlgebra:
    """Finite-dimensional unital commutative algebra: ``e_i e_j = sum_k mult[i][j][k] e_k``.

    ``augmentation`` is an optional algebra map to the rationals (a linear
    functional); it is what trivial modules are built from.
    """

    dim: int
    unit: Vec
    mult: tuple
    augmentation: Vec | None = None
    name: str = ""

    @classmethod
    def create(cls, dim, unit, mult, augmentation=None, name="") -> "CommAlgebra":
        return cls(dim, vec(unit), tensor3(mult), None if augmentation is None else vec(augmentation), name)

    def mul(self, a: Sequence, b: Sequence) -> Vec:
        return bilinear(self.mult, a, b, self.dim)

    @cached_property
    def basis_mult(self) -> tuple:
        """``basis_mult[i]`` is the matrix of multiplication by ``e_i``."""
        return tuple(Matrix.from_columns([self.mult[i][j] for j in range(self.dim)], self.dim)
                     for i in range(self.dim))

    def mult_matrix(self, a: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, x in enumerate(a):
            if x:
                out = out + self.basis_mult[i].scale(x)
        return out

    def basis(self, i: int) -> Vec:
        return unit_vec(self.dim, i)


def validate_comm_algebra(A: CommAlgebra) -> list:
    rep = []
    n = A.dim
    if len(A.unit) != n:
        return [Violation("shape.unit", (), f"unit has {len(A.unit)} entries for dim {n}")]
    if len(A.mult) != n or any(len(r) != n or any(len(v) != n for v in r) for r in A.mult):
        return [Violation("shape.mult")]
    e = [A.basis(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if A.mult[i][j] != A.mult[j][i]:
                rep.append(Violation("comm.commutativity", (i, j)))
    for i, j, k in itertools.product(range(n), repeat=3):
        if A.mul(A.mul(e[i], e[j]), e[k]) != A.mul(e[i], A.mul(e[j], e[k])):
            rep.append(Violation("comm.associativity", (i, j, k)))
    for i in range(n):
        if A.mul(A.unit, e[i]) != e[i]:
            rep.append(Violation("comm.unit", (i,)))
    if A.augmentation is not None:
        chi = A.augmentation
        ev = lambda a: sum((x * y for x, y in zip(chi, a)), ZERO)
        if ev(A.unit) != 1:
            rep.append(Violation("augmentation.unit"))
        for i in range(n):
            for j in range(i, n):
                if ev(A.mult[i][j]) != chi[i] * chi[j]:
                    rep.append(Violation("augmentation.multiplicative", (i, j)))
    return rep


def derivation_violations(A: CommAlgebra, D: Matrix) -> list:
    rep = []
    n = A.dim
    for i in range(n):
        for j in range(i, n):
            lhs = D.apply(A.mult[i][j])
            rhs = tuple(x + y for x, y in zip(A.mul(A.basis(i), D.column(j)), A.mul(D.column(i), A.basis(j))))
            if lhs != rhs:
                rep.append(Violation("derivation.leibniz", (i, j)))
    if any(D.apply(A.unit)):
        rep.append(Violation("derivation.unit"))
    return rep


def is_derivation(A: CommAlgebra, D: Matrix) -> bool:
    return D.shape == (A.dim, A.dim) and not derivation_violations(A, D)


def derivations_of(A: CommAlgebra) -> list:
    """Basis (as matrices) of ``Der_K(A)``, the solutions of the Leibniz system."""
    n = A.dim
    # unknown D flattened row-major: D[r][c] at r*n + c; D e_c = column c
    eqs = []
    for i in range(n):
        for j in range(i, n):
            # D(e_i e_j) - e_i D(e_j) - D(e_i) e_j = 0, one equation per output coord
            for out in range(n):
                row = [ZERO] * (n * n)
                for k, c in enumerate(A.mult[i][j]):
                    if c:
                        row[out * n + k] += c
                for r in range(n):
                    # e_i * D(e_j): D(e_j) = sum_r D[r][j] e_r
                    c = A.mult[i][r][out]
                    if c:
                        row[r * n + j] -= c
                    c = A.mult[r][j][out]
                    if c:
                        row[r * n + i] -= c
                eqs.append(row)
    m = Matrix.from_rows(eqs, n * n) if eqs else Matrix.zeros(0, n * n)
    sol = kernel(m)
    return [Matrix.unflatten(b, n, n) for b in sol.basis]


def commutator_matrix(D: Matrix, E: Matrix) -> Matrix:
    return D @ E - E @ D


# ---------------------------------------------------------------- Lie-Rinehart algebras


@dataclass(frozen=True)
class LieRinehartAlgebra:
    """Lie-Rinehart algebra over ``base`` in structure constants.

    ``a_action[i][j]`` is ``a_i x_j``, ``bracket[j][k]`` is ``[x_j, x_k]``
    and ``anchor[j]`` is the matrix of the derivation ``alpha(x_j)`` of A.
    """

    base: CommAlgebra
    dim: int
    a_action: tuple
    bracket: tuple
    anchor: tuple
    name: str = ""
    labels: tuple = ()

    @classmethod
    def create(cls, base, dim, a_action, bracket, anchor, name="", labels=()) -> "LieRinehartAlgebra":
        anchor = tuple(a if isinstance(a, Matrix) else Matrix.from_rows(a, base.dim) for a in anchor)
        return cls(base, dim, tensor3(a_action), tensor3(bracket), anchor, name, tuple(labels))

    # -- elementwise operations
    def br(self, x: Sequence, y: Sequence) -> Vec:
        return bilinear(self.bracket, x, y, self.dim)

    def act(self, a: Sequence, x: Sequence) -> Vec:
        return bilinear(self.a_action, a, x, self.dim)

    def anchor_of(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.base.dim, self.base.dim)
        for j, c in enumerate(x):
            if c:
                out = out + self.anchor[j].scale(c)
        return out

    def on_base(self, x: Sequence, a: Sequence) -> Vec:
        """``x(a) = alpha(x)(a)``."""
        return self.anchor_of(x).apply(a)

    def basis(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def zero(self) -> Vec:
        return zero_vec(self.dim)

    # -- operator matrices
    @cached_property
    def ad(self) -> tuple:
        return tuple(Matrix.from_columns([self.bracket[i][j] for j in range(self.dim)], self.dim)
                     for i in range(self.dim))

    @cached_property
    def a_ops(self) -> tuple:
        """``a_ops[i]`` is the matrix of ``x -> a_i x`` on L."""
        return tuple(Matrix.from_columns([self.a_action[i][j] for j in range(self.dim)], self.dim)
                     for i in range(self.base.dim))

    def a_matrix(self, a: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, c in enumerate(a):
            if c:
                out = out + self.a_ops[i].scale(c)
        return out

    @cached_property
    def anchor_flat(self) -> Matrix:
        """Matrix of ``x -> vec(alpha(x))``, shape ``dimA^2 x dim``."""
        return Matrix.from_columns([a.flat() for a in self.anchor], self.base.dim ** 2)

    @cached_property
    def has_zero_anchor(self) -> bool:
        return all(a.is_zero() for a in self.anchor)

    def __repr__(self):
        return f"LieRinehartAlgebra({self.name or '?'}, dim={self.dim}, base_dim={self.base.dim})"


def validate_lr(L: LieRinehartAlgebra) -> list:
    A = L.base
    n, d = L.dim, A.dim
    rep = []
    try:
        if len(L.a_action) != d or any(len(r) != n or any(len(v) != n for v in r) for r in L.a_action):
            return [Violation("shape.a_action")]
        if len(L.bracket) != n or any(len(r) != n or any(len(v) != n for v in r) for r in L.bracket):
            return [Violation("shape.bracket")]
        if len(L.anchor) != n or any(m.shape != (d, d) for m in L.anchor):
            return [Violation("shape.anchor")]
    except TypeError:
        return [Violation("shape")]
    rep += [Violation("base." + v.axiom.split(".", 1)[-1], v.indices) for v in validate_comm_algebra(A)]
    e = [L.basis(i) for i in range(n)]
    ea = [A.basis(i) for i in range(d)]
    # A-module
    for i, j, k in itertools.product(range(d), range(d), range(n)):
        if L.act(A.mult[i][j], e[k]) != L.act(ea[i], L.a_action[j][k]):
            rep.append(Violation("module.associativity", (i, j, k)))
    for k in range(n):
        if L.act(A.unit, e[k]) != e[k]:
            rep.append(Violation("module.unit", (k,)))
    # bracket
    for i in range(n):
        for j in range(i, n):
            s = tuple(x + y for x, y in zip(L.bracket[i][j], L.bracket[j][i]))
            if any(s):
                rep.append(Violation("bracket.antisymmetry", (i, j)))
    for i, j, k in itertools.combinations(range(n), 3):
        t1 = L.br(e[i], L.bracket[j][k])
        t2 = L.br(e[j], L.bracket[k][i])
        t3 = L.br(e[k], L.bracket[i][j])
        if any(x + y + z for x, y, z in zip(t1, t2, t3)):
            rep.append(Violation("bracket.jacobi", (i, j, k)))
    # anchor
    for j in range(n):
        if derivation_violations(A, L.anchor[j]):
            rep.append(Violation("anchor.derivation", (j,)))
    for i in range(n):
        for j in range(i + 1, n):
            if L.anchor_of(L.bracket[i][j]) != commutator_matrix(L.anchor[i], L.anchor[j]):
                rep.append(Violation("anchor.lie", (i, j)))
    for i, j in itertools.product(range(d), range(n)):
        if L.anchor_of(L.a_action[i][j]) != A.basis_mult[i] @ L.anchor[j]:
            rep.append(Violation("anchor.a_linear", (i, j)))
    # [x, a y] = a[x, y] + x(a) y
    for i, a, k in itertools.product(range(n), range(d), range(n)):
        lhs = L.br(e[i], L.a_action[a][k])
        rhs = tuple(x + y for x, y in zip(L.act(ea[a], L.bracket[i][k]),
                                          L.act(L.anchor[i].column(a), e[k])))
        if lhs != rhs:
            rep.append(Violation("leibniz", (i, a, k)))
    return rep


# ---------------------------------------------------------------- subspaces of L


def center(L: LieRinehartAlgebra) -> Subspace:
    """``Z_A(L) = {x : [a x, z] = 0 for all a, z}``."""
    rows = []
    for ai in range(L.base.dim):
        aop = L.a_ops[ai]
        for j in range(L.dim):
            # x -> [a_i x, z_j] = -ad(z_j)(a_i x)
            m = L.ad[j] @ aop
            rows.extend(m.entries)
    if not rows:
        return Subspace.full(L.dim)
    return kernel(Matrix(len(rows), L.dim, tuple(rows)))


def commutator(L: LieRinehartAlgebra, M: Subspace | None = None, N: Subspace | None = None) -> Subspace:
    """``{M, N}``: the K-span of ``a [x, y]`` with ``x`` in M, ``y`` in N."""
    M = M or Subspace.full(L.dim)
    N = N or Subspace.full(L.dim)
    vecs = []
    for x in M.basis:
        for y in N.basis:
            b = L.br(x, y)
            if any(b):
                for ai in range(L.base.dim):
                    vecs.append(L.a_ops[ai].apply(b))
    return Subspace.span(vecs, L.dim)


def derived(L: LieRinehartAlgebra) -> Subspace:
    return commutator(L)


def abelianize(L: LieRinehartAlgebra) -> QuotientPresentation:
    """``L^ab = L / {L, L}`` as an A-module quotient."""
    return quotient(L.dim, close_under(commutator(L), L.a_ops))


def is_perfect(L: LieRinehartAlgebra) -> bool:
    return commutator(L).is_full()


def is_submodule(L: LieRinehartAlgebra, S: Subspace) -> bool:
    return all(S.contains(op.apply(v)) for op in L.a_ops for v in S.basis)


def is_subalgebra(L: LieRinehartAlgebra, S: Subspace) -> bool:
    return is_submodule(L, S) and all(S.contains(L.br(u, v)) for u in S.basis for v in S.basis)


def is_ideal(L: LieRinehartAlgebra, S: Subspace) -> bool:
    """A-submodule, bracket ideal, and the anchor vanishes on it."""
    if not is_submodule(L, S):
        return False
    if any(L.anchor_of(v).flat() != zero_vec(L.base.dim ** 2) for v in S.basis):
        return False
    return all(S.contains(L.br(e, v)) for v in S.basis for e in (L.basis(i) for i in range(L.dim)))


# ---------------------------------------------------------------- induced structures


def induced_on_subspace(base: CommAlgebra, S: Subspace, br, act, anchor, name="") -> LieRinehartAlgebra:
    """LR structure on a closed subspace ``S`` of some ambient space.

    ``br(u, v)``, ``act(a_index, u)`` and ``anchor(u)`` are ambient
    operations; results are expressed in the RREF basis of ``S``.
    """
    k = S.rank
    basis = S.basis
    a_action = tuple(tuple(S.coords(act(i, u)) for u in basis) for i in range(base.dim))
    bracket = tuple(tuple(S.coords(br(u, v)) for v in basis) for u in basis)
    anchors = tuple(anchor(u) for u in basis)
    return LieRinehartAlgebra(base, k, a_action, bracket, anchors, name)


def induced_on_quotient(base: CommAlgebra, Q: QuotientPresentation, br, act, anchor, name="") -> LieRinehartAlgebra:
    """LR structure on a quotient, computed on canonical section representatives."""
    reps = [Q.lift(unit_vec(Q.dim, s)) for s in range(Q.dim)]
    a_action = tuple(tuple(Q.project(act(i, u)) for u in reps) for i in range(base.dim))
    bracket = tuple(tuple(Q.project(br(u, v)) for v in reps) for u in reps)
    anchors = tuple(anchor(u) for u in reps)
    return LieRinehartAlgebra(base, Q.dim, a_action, bracket, anchors, name)


def subalgebra(L: LieRinehartAlgebra, S: Subspace, name="") -> tuple:
    """Subalgebra on ``S`` and its inclusion morphism."""
    if not is_subalgebra(L, S):
        raise ValueError("subspace is not a Lie-Rinehart subalgebra")
    sub = induced_on_subspace(L.base, S, L.br, lambda i, u: L.a_ops[i].apply(u), L.anchor_of, name)
    return sub, LRMorphism(sub, L, S.inclusion())


def quotient_algebra(L: LieRinehartAlgebra, I: Subspace, name="") -> tuple:
    """``L / I`` for an ideal ``I`` and the projection morphism."""
    if not is_ideal(L, I):
        raise ValueError("subspace is not an ideal")
    Q = quotient(L.dim, I)
    quo = induced_on_quotient(L.base, Q, L.br, lambda i, u: L.a_ops[i].apply(u), L.anchor_of, name)
    return quo, LRMorphism(L, quo, Q.projection)


# ---------------------------------------------------------------- morphisms


@dataclass(frozen=True)
class LRMorphism:
    source: LieRinehartAlgebra
    target: LieRinehartAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match "
                             f"{self.target.dim}x{self.source.dim}")

    def __call__(self, x: Sequence) -> Vec:
        return self.matrix.apply(x)

    def compose(self, other: "LRMorphism") -> "LRMorphism":
        """``self o other``."""
        return LRMorphism(other.source, self.target, self.matrix @ other.matrix)

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def image(self) -> Subspace:
        return image(self.matrix)

    def is_surjective(self) -> bool:
        return self.matrix.rank() == self.target.dim

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    @classmethod
    def identity(cls, L: LieRinehartAlgebra) -> "LRMorphism":
        return cls(L, L, Matrix.identity(L.dim))

    @classmethod
    def zero(cls, L, M) -> "LRMorphism":
        return cls(L, M, Matrix.zeros(M.dim, L.dim))


def validate_morphism(f: LRMorphism) -> list:
    L, M = f.source, f.target
    if L.base != M.base:
        raise ValueError("morphisms must be between algebras over the same base")
    rep = []
    n = L.dim
    F = f.matrix
    for a in range(L.base.dim):
        for j in range(n):
            if F.apply(L.a_action[a][j]) != M.a_ops[a].apply(F.column(j)):
                rep.append(Violation("morphism.a_linear", (a, j)))
    for i in range(n):
        for j in range(i + 1, n):
            if F.apply(L.bracket[i][j]) != M.br(F.column(i), F.column(j)):
                rep.append(Violation("morphism.bracket", (i, j)))
    for j in range(n):
        if M.anchor_of(F.column(j)) != L.anchor[j]:
            rep.append(Violation("morphism.anchor", (j,)))
    return rep


# ---------------------------------------------------------------- modules


@dataclass(frozen=True)
class LeftLRModule:
    """``a_action[i][m] = a_i m`` and ``l_action[x][m] = x m``."""

    algebra: LieRinehartAlgebra
    dim: int
    a_action: tuple
    l_action: tuple
    name: str = ""

    @classmethod
    def create(cls, algebra, dim, a_action, l_action, name="") -> "LeftLRModule":
        return cls(algebra, dim, tensor3(a_action), tensor3(l_action), name)

    def act_a(self, a: Sequence, m: Sequence) -> Vec:
        return bilinear(self.a_action, a, m, self.dim)

    def act_l(self, x: Sequence, m: Sequence) -> Vec:
        return bilinear(self.l_action, x, m, self.dim)

    @cached_property
    def l_ops(self) -> tuple:
        return tuple(Matrix.from_columns([self.l_action[x][m] for m in range(self.dim)], self.dim)
                     for x in range(self.algebra.dim))

    @cached_property
    def a_ops(self) -> tuple:
        return tuple(Matrix.from_columns([self.a_action[i][m] for m in range(self.dim)], self.dim)
                     for i in range(self.algebra.base.dim))


@dataclass(frozen=True)
class RightLRModule:
    """``a_action[i][m] = a_i m`` and ``r_action[m][x] = m x``."""

    algebra: LieRinehartAlgebra
    dim: int
    a_action: tuple
    r_action: tuple
    name: str = ""

    @classmethod
    def create(cls, algebra, dim, a_action, r_action, name="") -> "RightLRModule":
        return cls(algebra, dim, tensor3(a_action), tensor3(r_action), name)

    def act_a(self, a: Sequence, m: Sequence) -> Vec:
        return bilinear(self.a_action, a, m, self.dim)

    def act_r(self, m: Sequence, x: Sequence) -> Vec:
        return bilinear(self.r_action, m, x, self.dim)

    @cached_property
    def r_ops(self) -> tuple:
        """``r_ops[x]`` is the matrix of ``m -> m x``."""
        return tuple(Matrix.from_columns([self.r_action[m][x] for m in range(self.dim)], self.dim)
                     for x in range(self.algebra.dim))

    @cached_property
    def a_ops(self) -> tuple:
        return tuple(Matrix.from_columns([self.a_action[i][m] for m in range(self.dim)], self.dim)
                     for i in range(self.algebra.base.dim))


def _module_axioms(A: CommAlgebra, dim: int, act_a, a_action) -> list:
    rep = []
    e = [unit_vec(dim, m) for m in range(dim)]
    for i, j, m in itertools.product(range(A.dim), range(A.dim), range(dim)):
        if act_a(A.mult[i][j], e[m]) != act_a(A.basis(i), a_action[j][m]):
            rep.append(Violation("module.associativity", (i, j, m)))
    for m in range(dim):
        if act_a(A.unit, e[m]) != e[m]:
            rep.append(Violation("module.unit", (m,)))
    return rep


def validate_left_module(M: LeftLRModule) -> list:
    L, A = M.algebra, M.algebra.base
    n, d, k = L.dim, A.dim, M.dim
    rep = _module_axioms(A, k, M.act_a, M.a_action)
    e = [unit_vec(k, m) for m in range(k)]
    for i, j, m in itertools.product(range(n), range(n), range(k)):
        if j <= i:
            continue
        lhs = M.act_l(L.bracket[i][j], e[m])
        rhs = vsub(M.act_l(L.basis(i), M.l_action[j][m]), M.act_l(L.basis(j), M.l_action[i][m]))
        if lhs != rhs:
            rep.append(Violation("left.lie_module", (i, j, m)))
    for a, x, m in itertools.product(range(d), range(n), range(k)):
        if M.act_l(L.a_action[a][x], e[m]) != M.act_a(A.basis(a), M.l_action[x][m]):
            rep.append(Violation("left.a_linear", (a, x, m)))
        # x (a m) = a (x m) + x(a) m
        lhs = M.act_l(L.basis(x), M.a_action[a][m])
        rhs = tuple(p + q for p, q in zip(M.act_a(A.basis(a), M.l_action[x][m]),
                                          M.act_a(L.anchor[x].column(a), e[m])))
        if lhs != rhs:
            rep.append(Violation("left.leibniz", (a, x, m)))
    return rep


def validate_right_module(M: RightLRModule) -> list:
    L, A = M.algebra, M.algebra.base
    n, d, k = L.dim, A.dim, M.dim
    rep = _module_axioms(A, k, M.act_a, M.a_action)
    e = [unit_vec(k, m) for m in range(k)]
    for i, j, m in itertools.product(range(n), range(n), range(k)):
        if j <= i:
            continue
        # m [x, y] = (m x) y - (m y) x
        lhs = M.act_r(e[m], L.bracket[i][j])
        rhs = vsub(M.act_r(M.r_action[m][i], L.basis(j)), M.act_r(M.r_action[m][j], L.basis(i)))
        if lhs != rhs:
            rep.append(Violation("right.lie_module", (i, j, m)))
    for a, x, m in itertools.product(range(d), range(n), range(k)):
        amx = M.act_r(M.a_action[a][m], L.basis(x))
        max_ = M.act_r(e[m], L.a_action[a][x])
        if amx != max_:
            rep.append(Violation("right.a_balance", (a, x, m)))
        # m (a x) = a (m x) - x(a) m
        rhs = vsub(M.act_a(A.basis(a), M.r_action[m][x]), M.act_a(L.anchor[x].column(a), e[m]))
        if max_ != rhs:
            rep.append(Violation("right.leibniz", (a, x, m)))
    return rep


def _character(A: CommAlgebra, character):
    chi = A.augmentation if character is None else vec(character)
    if chi is None:
        raise ValueError(f"base algebra {A.name or '?'} has no augmentation; pass a character")
    return chi


def trivial_left_module(L: LieRinehartAlgebra, dim: int = 1, character=None) -> LeftLRModule:
    """``Q^dim`` with A acting through a character and L acting by zero.

    Valid only when the character kills every ``x(a)``; check with
    ``validate_left_module``.
    """
    chi = _character(L.base, character)
    a_action = tuple(tuple(tuple(chi[i] if c == m else ZERO for c in range(dim)) for m in range(dim))
                     for i in range(L.base.dim))
    l_action = tuple(tuple(zero_vec(dim) for _ in range(dim)) for _ in range(L.dim))
    return LeftLRModule(L, dim, a_action, l_action, "trivial")


def trivial_right_module(L: LieRinehartAlgebra, dim: int = 1, character=None) -> RightLRModule:
    """Right analogue of ``trivial_left_module``; legal only for a zero anchor."""
    if not L.has_zero_anchor:
        raise ValueError("a trivial right module forces x(a) m = 0; the anchor must vanish")
    chi = _character(L.base, character)
    a_action = tuple(tuple(tuple(chi[i] if c == m else ZERO for c in range(dim)) for m in range(dim))
                     for i in range(L.base.dim))
    r_action = tuple(tuple(zero_vec(dim) for _ in range(L.dim)) for _ in range(dim))
    return RightLRModule(L, dim, a_action, r_action, "trivial")


def base_as_left_module(L: LieRinehartAlgebra) -> LeftLRModule:
    """A itself, with L acting through the anchor."""
    A = L.base
    return LeftLRModule(L, A.dim, A.mult,
                        tuple(tuple(L.anchor[x].column(m) for m in range(A.dim)) for x in range(L.dim)),
                        "A")


def adjoint_module(L: LieRinehartAlgebra) -> LeftLRModule:
    """L acting on itself by the bracket (a left module when the anchor is zero)."""
    return LeftLRModule(L, L.dim, L.a_action, L.bracket, "adjoint")


def adjoint_right_module(L: LieRinehartAlgebra) -> RightLRModule:
    """``m x = [m, x]``; a right module when the anchor is zero."""
    return RightLRModule(L, L.dim, L.a_action, L.bracket, "adjoint")
