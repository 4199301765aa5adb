"""Mutual actions, crossed modules and the non-abelian tensor product ``L (x) M``.

``L (x) M`` is realized on the ambient space ``A (x) L (x) M`` (tensor over K).
Basis tensor ``a_i (x) x_j (x) m_k`` has index ``(i * dim L + j) * dim M + k``.
The linear relations are the two action families with free A-coefficient;
the bracket is the generator formula, checked to descend to the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import (
    LieRinehartAlgebra, LRMorphism, Violation, abelianize, bilinear, commutator_matrix, is_perfect,
    require_valid, subalgebra, validate_lr, validate_morphism,
)
from .constructions import central_witness, module_algebra, validate_lr_action
from .exactlin import (
    ZERO, Echelon, Matrix, Subspace, close_under_sparse, image_of, quotient, solve_vec, vadd, vsub,
)
from .uce import UceAlgebra, WellDefinednessError, _acc, _items, build_uce, universal_lift

# ---------------------------------------------------------------- actions


def _table(src_dim: int, on_dim: int, fn: Callable) -> tuple:
    return tuple(tuple(tuple(fn(i, j)) for j in range(on_dim)) for i in range(src_dim))


@dataclass(frozen=True)
class ActionPair:
    """``l_on_m[x][m] = ^x m`` (in M) and ``m_on_l[m][x] = ^m x`` (in L)."""

    L: LieRinehartAlgebra
    M: LieRinehartAlgebra
    l_on_m: tuple
    m_on_l: tuple

    def __post_init__(self):
        if self.L.base != self.M.base:
            raise ValueError("both algebras must share the base algebra")
        shape_lm = (len(self.l_on_m), {len(r) for r in self.l_on_m}, {len(v) for r in self.l_on_m for v in r})
        shape_ml = (len(self.m_on_l), {len(r) for r in self.m_on_l}, {len(v) for r in self.m_on_l for v in r})
        nL, nM = self.L.dim, self.M.dim
        if shape_lm[0] != nL or shape_lm[1] - {nM} or shape_lm[2] - {nM}:
            raise ValueError("l_on_m must be a dim L x dim M x dim M tensor")
        if shape_ml[0] != nM or shape_ml[1] - {nL} or shape_ml[2] - {nL}:
            raise ValueError("m_on_l must be a dim M x dim L x dim L tensor")

    def lm(self, x: Sequence, m: Sequence):
        return bilinear(self.l_on_m, x, m, self.M.dim)

    def ml(self, m: Sequence, x: Sequence):
        return bilinear(self.m_on_l, m, x, self.L.dim)

    def swapped(self) -> "ActionPair":
        return ActionPair(self.M, self.L, self.m_on_l, self.l_on_m)

    @classmethod
    def from_functions(cls, L, M, lm: Callable, ml: Callable) -> "ActionPair":
        """Tabulate ``lm(x, m)`` and ``ml(m, x)`` on basis vectors."""
        return cls(L, M,
                   _table(L.dim, M.dim, lambda i, j: lm(L.basis(i), M.basis(j))),
                   _table(M.dim, L.dim, lambda i, j: ml(M.basis(i), L.basis(j))))

    @classmethod
    def trivial(cls, L, M) -> "ActionPair":
        return cls.from_functions(L, M, lambda x, m: M.zero(), lambda m, x: L.zero())


def self_actions(L: LieRinehartAlgebra) -> ActionPair:
    """L acting on itself by the bracket, both ways."""
    return ActionPair(L, L, L.bracket, L.bracket)


def bracket_actions(iL: LRMorphism, iM: LRMorphism) -> ActionPair:
    """Actions induced by the bracket of a common ambient algebra on two injective maps into it.

    ``^x m`` is ``[iL x, iM m]`` read back in M, and ``^m x`` is ``[iM m, iL x]``
    read back in L; both brackets must land in the respective images.
    """
    E = iL.target
    if iM.target is not E and iM.target != E:
        raise ValueError("both maps must land in the same algebra")

    def back(i: LRMorphism, v):
        c = solve_vec(i.matrix, v)
        if c is None:
            raise ValueError("bracket leaves the image; the subalgebra is not stable")
        return c

    return ActionPair.from_functions(
        iL.source, iM.source,
        lambda x, m: back(iM, E.br(iL(x), iM(m))),
        lambda m, x: back(iL, E.br(iM(m), iL(x))),
    )


def validate_action(L: LieRinehartAlgebra, M: LieRinehartAlgebra, act) -> list:
    """Axioms for an action ``act[x][m] = ^x m`` of L on M, checked on basis instances.

    ``action.module``: ``^x(am) = a ^x m + x(a) m``; ``action.lie``: the Lie
    action law; ``action.derivation``: ``^x [m, n] = [^x m, n] + [m, ^x n]``.
    """
    A = L.base
    op = lambda x, m: bilinear(act, x, m, M.dim)
    eL = [L.basis(i) for i in range(L.dim)]
    eM = [M.basis(i) for i in range(M.dim)]
    rep = []
    for a in range(A.dim):
        for x in range(L.dim):
            for m in range(M.dim):
                lhs = op(eL[x], M.a_action[a][m])
                rhs = vadd(M.a_ops[a].apply(act[x][m]), M.act(L.anchor[x].column(a), eM[m]))
                if lhs != rhs:
                    rep.append(Violation("action.module", (a, x, m)))
    for x in range(L.dim):
        for y in range(x + 1, L.dim):
            for m in range(M.dim):
                lhs = op(L.bracket[x][y], eM[m])
                rhs = vsub(op(eL[x], act[y][m]), op(eL[y], act[x][m]))
                if lhs != rhs:
                    rep.append(Violation("action.lie", (x, y, m)))
    for x in range(L.dim):
        for m in range(M.dim):
            for n in range(m + 1, M.dim):
                lhs = op(eL[x], M.bracket[m][n])
                rhs = vadd(M.br(act[x][m], eM[n]), M.br(eM[m], act[x][n]))
                if lhs != rhs:
                    rep.append(Violation("action.derivation", (x, m, n)))
    return rep


def validate_pair(pair: ActionPair) -> list:
    """Both one-sided actions; violations from the M-side action are prefixed ``reverse.``."""
    rep = validate_action(pair.L, pair.M, pair.l_on_m)
    rev = validate_action(pair.M, pair.L, pair.m_on_l)
    return rep + [Violation("reverse." + v.axiom, v.indices, v.detail) for v in rev]


def check_compatible(pair: ActionPair) -> list:
    """Compatibility conditions on basis instances.

    ``compatible.1``: ``-alpha(^m x) = alpha(^x m) = [alpha x, alpha m]``;
    ``compatible.2``: ``^(^m x) n = [n, ^x m]``;
    ``compatible.3``: ``^(^x m) y = [y, ^m x]``.
    """
    L, M = pair.L, pair.M
    rep = []
    for x in range(L.dim):
        for m in range(M.dim):
            target = commutator_matrix(L.anchor[x], M.anchor[m])
            left = L.anchor_of(pair.m_on_l[m][x]).scale(-1)
            right = M.anchor_of(pair.l_on_m[x][m])
            if left != target or right != target:
                rep.append(Violation("compatible.1", (x, m)))
    for x in range(L.dim):
        for m in range(M.dim):
            mx, xm = pair.m_on_l[m][x], pair.l_on_m[x][m]
            for n in range(M.dim):
                if pair.lm(mx, M.basis(n)) != M.br(M.basis(n), xm):
                    rep.append(Violation("compatible.2", (x, m, n)))
            for y in range(L.dim):
                if pair.ml(xm, L.basis(y)) != L.br(L.basis(y), mx):
                    rep.append(Violation("compatible.3", (x, m, y)))
    return rep


# ---------------------------------------------------------------- crossed modules


@dataclass(frozen=True)
class CrossedModule:
    """``boundary: R -> L`` (matrix) with ``action[x][r] = x o r``; R has zero anchor."""

    R: LieRinehartAlgebra
    L: LieRinehartAlgebra
    boundary: Matrix
    action: tuple

    def d(self, r: Sequence):
        return self.boundary.apply(r)

    def act(self, x: Sequence, r: Sequence):
        return bilinear(self.action, x, r, self.R.dim)


def validate_crossed_module(xm: CrossedModule) -> list:
    """Action axioms plus ``crossed.lie_map`` and the four crossed-module conditions.

    ``crossed.equivariance``: ``d(x o r) = [x, d r]``; ``crossed.peiffer``:
    ``d(r') o r = [r', r]``; ``crossed.a_linear``: ``d(ar) = a d(r)``;
    ``crossed.anchor``: ``d(r)(a) = 0``.
    """
    R, L, D = xm.R, xm.L, xm.boundary
    if D.shape != (L.dim, R.dim):
        raise ValueError("boundary matrix has the wrong shape")
    rep = list(validate_lr_action(L, R, xm.action))
    for r in range(R.dim):
        for s in range(r + 1, R.dim):
            if D.apply(R.bracket[r][s]) != L.br(D.column(r), D.column(s)):
                rep.append(Violation("crossed.lie_map", (r, s)))
    for x in range(L.dim):
        for r in range(R.dim):
            if D.apply(xm.action[x][r]) != L.br(L.basis(x), D.column(r)):
                rep.append(Violation("crossed.equivariance", (x, r)))
    for r2 in range(R.dim):
        for r in range(R.dim):
            if xm.act(D.column(r2), R.basis(r)) != R.bracket[r2][r]:
                rep.append(Violation("crossed.peiffer", (r2, r)))
    for a in range(L.base.dim):
        for r in range(R.dim):
            if D.apply(R.a_action[a][r]) != L.a_ops[a].apply(D.column(r)):
                rep.append(Violation("crossed.a_linear", (a, r)))
    for r in range(R.dim):
        if not L.anchor_of(D.column(r)).is_zero():
            rep.append(Violation("crossed.anchor", (r,)))
    return rep


def inclusion_crossed_module(inc: LRMorphism) -> CrossedModule:
    """An injective map onto an ideal, acted on by the bracket of the target."""
    R, L = inc.source, inc.target

    def act(x, r):
        c = solve_vec(inc.matrix, L.br(x, inc(r)))
        if c is None:
            raise ValueError("the image is not an ideal")
        return c

    return CrossedModule(R, L, inc.matrix, _table(L.dim, R.dim, lambda i, j: act(L.basis(i), R.basis(j))))


def kernel_crossed_module(f: LRMorphism) -> CrossedModule:
    """``Ker f -> L`` for a morphism ``f: L -> N``."""
    K, inc = subalgebra(f.source, f.kernel(), name=f"ker({f.source.name})")
    return inclusion_crossed_module(inc)


def module_crossed_module(module) -> CrossedModule:
    """The zero map from a left ``(A, L)``-module, viewed as an abelian Lie A-algebra."""
    L = module.algebra
    R = module_algebra(L.base, module.dim, module.a_action)
    return CrossedModule(R, L, Matrix.zeros(L.dim, R.dim), module.l_action)


def crossed_module_actions(xl: CrossedModule, xm: CrossedModule) -> ActionPair:
    """Mutual actions of the sources of two crossed modules over the same algebra, through that algebra."""
    if xl.L != xm.L:
        raise ValueError("crossed modules must share their target")
    return ActionPair.from_functions(
        xl.R, xm.R,
        lambda x, m: xm.act(xl.d(x), m),
        lambda m, x: xl.act(xm.d(m), x),
    )


# ---------------------------------------------------------------- pairings


def _pairing_value(f: tuple, E: LieRinehartAlgebra, x, m):
    out = [ZERO] * E.dim
    for j, xj in _items(x):
        for k, mk in _items(m):
            out = [p + xj * mk * q for p, q in zip(out, f[j][k])]
    return tuple(out)


def validate_pairing(pair: ActionPair, E: LieRinehartAlgebra, f: tuple) -> list:
    """Pairing axioms for ``f[x][m] in E``, on basis instances (``pairing.1`` .. ``pairing.4``)."""
    L, M, A = pair.L, pair.M, pair.L.base
    F = lambda x, m: _pairing_value(f, E, x, m)
    eL = [L.basis(i) for i in range(L.dim)]
    eM = [M.basis(i) for i in range(M.dim)]
    rep = []
    for x in range(L.dim):
        for m in range(M.dim):
            if E.anchor_of(f[x][m]) != commutator_matrix(L.anchor[x], M.anchor[m]):
                rep.append(Violation("pairing.1", (x, m)))
    for x in range(L.dim):
        for y in range(x + 1, L.dim):
            for m in range(M.dim):
                rhs = vsub(F(eL[x], pair.l_on_m[y][m]), F(eL[y], pair.l_on_m[x][m]))
                if F(L.bracket[x][y], eM[m]) != rhs:
                    rep.append(Violation("pairing.2", (x, y, m)))
    for x in range(L.dim):
        for m in range(M.dim):
            for n in range(m + 1, M.dim):
                rhs = vsub(F(pair.m_on_l[n][x], eM[m]), F(pair.m_on_l[m][x], eM[n]))
                if F(eL[x], M.bracket[m][n]) != rhs:
                    rep.append(Violation("pairing.3", (x, m, n)))
    for x in range(L.dim):
        for m in range(M.dim):
            D1 = commutator_matrix(L.anchor[x], M.anchor[m])
            for y in range(L.dim):
                for n in range(M.dim):
                    D2 = commutator_matrix(L.anchor[y], M.anchor[n])
                    bxy = E.br(f[x][m], f[y][n])
                    for a in range(A.dim):
                        for b in range(A.dim):
                            lhs = F(L.a_ops[a].apply(pair.m_on_l[m][x]), M.a_ops[b].apply(pair.l_on_m[y][n]))
                            ab = A.mult[a][b]
                            rhs = [-c for c in E.act(ab, bxy)]
                            rhs = vsub(rhs, E.act(A.mul(A.basis(a), D1.column(b)), f[y][n]))
                            rhs = vadd(rhs, E.act(A.mul(D2.column(a), A.basis(b)), f[x][m]))
                            if lhs != rhs:
                                rep.append(Violation("pairing.4", (a, x, m, b, y, n)))
    return rep


# ---------------------------------------------------------------- the tensor product


class _PairAmbient:
    """Index arithmetic, generator bracket, anchor and the maps mu, nu on ``A (x) L (x) M``."""

    def __init__(self, pair: ActionPair):
        self.pair = pair
        self.L, self.M, self.A = pair.L, pair.M, pair.L.base
        self.nL, self.nM, self.dA = pair.L.dim, pair.M.dim, pair.L.base.dim
        self.dim = self.dA * self.nL * self.nM
        self.gen_anchor = [[commutator_matrix(self.L.anchor[j], self.M.anchor[k]) for k in range(self.nM)]
                           for j in range(self.nL)]
        self._cache: dict = {}

    def index(self, i, j, k) -> int:
        return (i * self.nL + j) * self.nM + k

    def split(self, t: int) -> tuple:
        ij, k = divmod(t, self.nM)
        i, j = divmod(ij, self.nL)
        return i, j, k

    def tensor(self, a, x, m, out=None, scale=1) -> dict:
        out = {} if out is None else out
        ai, xi, mi = _items(a), _items(x), _items(m)
        for i, p in ai:
            for j, q in xi:
                pq = p * q * scale
                for k, r in mi:
                    _acc(out, self.index(i, j, k), pq * r)
        return out

    def bracket_basis(self, t1: int, t2: int) -> dict:
        hit = self._cache.get((t1, t2))
        if hit is not None:
            return hit
        A, L, M, pr = self.A, self.L, self.M, self.pair
        i, j, k = self.split(t1)
        p, q, r = self.split(t2)
        out: dict = {}
        u, w = pr.m_on_l[k][j], pr.l_on_m[q][r]
        if any(u) and any(w):
            self.tensor(A.mult[i][p], u, w, out, scale=-1)
        d1 = self.gen_anchor[j][k].column(p)
        if any(d1):
            self.tensor(A.basis_mult[i].apply(d1), L.basis(q), M.basis(r), out)
        d2 = self.gen_anchor[q][r].column(i)
        if any(d2):
            self.tensor(A.basis_mult[p].apply(d2), L.basis(j), M.basis(k), out, scale=-1)
        self._cache[(t1, t2)] = out
        return out

    def bracket(self, r: dict, s: dict) -> dict:
        out: dict = {}
        for t1, x in r.items():
            for t2, y in s.items():
                for c, z in self.bracket_basis(t1, t2).items():
                    _acc(out, c, x * y * z)
        return out

    def act(self, l: int, t: int) -> dict:
        i, j, k = self.split(t)
        return {self.index(m, j, k): c for m, c in _items(self.A.mult[l][i])}

    def act_sparse(self, l: int, v: dict) -> dict:
        out: dict = {}
        for t, x in v.items():
            for c, y in self.act(l, t).items():
                _acc(out, c, x * y)
        return out

    def mu(self, t: int):
        i, j, k = self.split(t)
        return tuple(-c for c in self.L.a_ops[i].apply(self.pair.m_on_l[k][j]))

    def nu(self, t: int):
        i, j, k = self.split(t)
        return self.M.a_ops[i].apply(self.pair.l_on_m[j][k])

    def anchor(self, t: int) -> Matrix:
        i, j, k = self.split(t)
        return self.A.basis_mult[i] @ self.gen_anchor[j][k]


def _action_relations(amb: _PairAmbient, add) -> None:
    L, M, pr = amb.L, amb.M, amb.pair
    for i in range(amb.dA):
        a = amb.A.basis(i)
        # a([x,y] (x) m - x (x) ^y m + y (x) ^x m)
        for j in range(amb.nL):
            for k in range(j + 1, amb.nL):
                for m in range(amb.nM):
                    v: dict = {}
                    amb.tensor(a, L.bracket[j][k], M.basis(m), v)
                    amb.tensor(a, L.basis(j), pr.l_on_m[k][m], v, scale=-1)
                    amb.tensor(a, L.basis(k), pr.l_on_m[j][m], v)
                    add(v)
        # a(x (x) [m,n] - ^n x (x) m + ^m x (x) n)
        for j in range(amb.nL):
            for m in range(amb.nM):
                for n in range(m + 1, amb.nM):
                    v = {}
                    amb.tensor(a, L.basis(j), M.bracket[m][n], v)
                    amb.tensor(a, pr.m_on_l[n][j], M.basis(m), v, scale=-1)
                    amb.tensor(a, pr.m_on_l[m][j], M.basis(n), v)
                    add(v)


def _hat_relations(amb: _PairAmbient, add) -> None:
    """``a[x,y] (x) b[x',y'] - ab [x,y] (x) [x',y'] + b[x',y'](a) x (x) y - a[x,y](b) x' (x) y'`` on basis 6-tuples."""
    A, L, n = amb.A, amb.L, amb.nL
    one = A.unit
    anc = [[L.anchor_of(L.bracket[j][k]) for k in range(n)] for j in range(n)]
    for ia in range(A.dim):
        for ib in range(A.dim):
            ab = A.mult[ia][ib]
            for j in range(n):
                for k in range(n):
                    u = L.bracket[j][k]
                    au = L.a_ops[ia].apply(u)
                    du_b = A.mul(A.basis(ia), anc[j][k].column(ib))
                    for q in range(n):
                        for r in range(n):
                            w = L.bracket[q][r]
                            v: dict = {}
                            amb.tensor(one, au, L.a_ops[ib].apply(w), v)
                            amb.tensor(ab, u, w, v, scale=-1)
                            dw_a = A.mul(A.basis(ib), anc[q][r].column(ia))
                            amb.tensor(dw_a, L.basis(j), L.basis(k), v)
                            amb.tensor(du_b, L.basis(q), L.basis(r), v, scale=-1)
                            add(v)


@dataclass(frozen=True)
class TensorAlgebra:
    """``L (x) M`` (or the hat-tensor) with ``mu: L (x) M -> L`` and ``nu: L (x) M -> M``."""

    pair: ActionPair
    presentation: object  # QuotientPresentation on A (x) L (x) M
    algebra: LieRinehartAlgebra
    mu: LRMorphism
    nu: LRMorphism
    hat: bool
    generators: int
    _amb: _PairAmbient = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def element(self, a, x, m):
        """Class of ``a (x) x (x) m``."""
        return self.presentation.project_sparse(self._amb.tensor(a, x, m))

    def generator(self, j: int, k: int):
        return self.element(self.pair.L.base.unit, self.pair.L.basis(j), self.pair.M.basis(k))

    def anchor_triangle(self) -> bool:
        T, L, M = self.algebra, self.pair.L, self.pair.M
        for c in range(T.dim):
            via_mu = L.anchor_of(self.mu.matrix.column(c))
            via_nu = M.anchor_of(self.nu.matrix.column(c))
            if not (T.anchor[c] == via_mu == via_nu):
                return False
        return True

    def module_tensor_map(self) -> Matrix:
        """Canonical map from ``A (x) L (x) M`` (the module tensor) onto ``L (x) M``."""
        return self.presentation.projection


def _check_tensor_well_defined(amb: _PairAmbient, Q) -> None:
    for r in Q._echelon.rows.values():
        mu = [ZERO] * amb.nL
        nu = [ZERO] * amb.nM
        anc = Matrix.zeros(amb.dA, amb.dA)
        for t, x in r.items():
            mu = [p + x * q for p, q in zip(mu, amb.mu(t))]
            nu = [p + x * q for p, q in zip(nu, amb.nu(t))]
            anc = anc + amb.anchor(t).scale(x)
        if any(mu) or any(nu):
            raise WellDefinednessError("mu or nu does not vanish on a relation")
        if not anc.is_zero():
            raise WellDefinednessError("anchor does not vanish on a relation")
        for t in range(amb.dim):
            for v in (amb.bracket(r, {t: 1}), amb.bracket({t: 1}, r)):
                if not Q.in_relations_sparse(v):
                    raise WellDefinednessError(f"bracket leaves the relations at basis tensor {amb.split(t)}")


def _build(pair: ActionPair, hat: bool, check: bool, name: str) -> TensorAlgebra:
    amb = _PairAmbient(pair)
    ech = Echelon(amb.dim)
    count = 0

    def add(v: dict):
        nonlocal count
        count += 1
        if v:
            ech.add_sparse(v)

    _action_relations(amb, add)
    if hat:
        _hat_relations(amb, add)
    seeds = [dict(r) for r in ech.rows.values()]
    if amb.dA > 1:
        close_under_sparse(ech, seeds, lambda v: [amb.act_sparse(l, v) for l in range(amb.dA)])
    Q = quotient(amb.dim, ech.to_subspace())
    if check:
        _check_tensor_well_defined(amb, Q)
    reps = Q.complement
    A, L, M = pair.L.base, pair.L, pair.M
    a_action = tuple(tuple(Q.project_sparse(amb.act(l, t)) for t in reps) for l in range(A.dim))
    bracket = tuple(tuple(Q.project_sparse(amb.bracket_basis(t1, t2)) for t2 in reps) for t1 in reps)
    anchor = tuple(amb.anchor(t) for t in reps)
    labL = L.labels or tuple(str(i) for i in range(L.dim))
    labM = M.labels or tuple(str(i) for i in range(M.dim))
    labels = tuple(f"{i}:{labL[j]}*{labM[k]}" for i, j, k in map(amb.split, reps))
    T = LieRinehartAlgebra(A, Q.dim, a_action, bracket, anchor, name, labels)
    mu = LRMorphism(T, L, Matrix.from_columns([amb.mu(t) for t in reps], L.dim))
    nu = LRMorphism(T, M, Matrix.from_columns([amb.nu(t) for t in reps], M.dim))
    if check:
        require_valid(validate_lr(T), "tensor product failed validation")
        require_valid(validate_morphism(mu), "mu is not a morphism")
        require_valid(validate_morphism(nu), "nu is not a morphism")
    out = TensorAlgebra(pair, Q, T, mu, nu, hat, count, amb)
    if check and not out.anchor_triangle():
        raise WellDefinednessError("anchor triangle does not commute")
    return out


def tensor_product(pair: ActionPair, check: bool = True) -> TensorAlgebra:
    """Non-abelian tensor product for a compatible pair of actions."""
    rep = validate_pair(pair) + check_compatible(pair)
    require_valid(rep, "actions are not valid and compatible")
    return _build(pair, False, check, f"{pair.L.name}(x){pair.M.name}")


# ---------------------------------------------------------------- maps out of and between tensor products


@dataclass(frozen=True)
class PairingFactor:
    morphism: LRMorphism
    unique: bool


def factor_pairing(T: TensorAlgebra, E: LieRinehartAlgebra, f: tuple) -> PairingFactor:
    """The morphism ``T -> E`` sending ``a (x) x (x) m`` to ``a f(x, m)``.

    Raises ``WellDefinednessError`` if the induced map does not vanish on the
    relations, and ``AxiomError`` if it is not a morphism.  Uniqueness holds
    when the generator classes span ``T`` as an A-module, which is checked.
    """
    amb = T._amb

    def value(t: int):
        i, j, k = amb.split(t)
        return E.a_ops[i].apply(f[j][k])

    for r in T.presentation._echelon.rows.values():
        acc = [ZERO] * E.dim
        for t, x in r.items():
            acc = [p + x * q for p, q in zip(acc, value(t))]
        if any(acc):
            raise WellDefinednessError("pairing does not vanish on the relations")
    mat = Matrix.from_columns([value(t) for t in T.presentation.complement], E.dim)
    phi = LRMorphism(T.algebra, E, mat)
    require_valid(validate_morphism(phi), "factored pairing is not a morphism")
    gens = Subspace.span([T.element(T.pair.L.base.basis(i), T.pair.L.basis(j), T.pair.M.basis(k))
                          for i in range(amb.dA) for j in range(amb.nL) for k in range(amb.nM)], T.dim)
    return PairingFactor(phi, gens.is_full())


def tensor_map(T1: TensorAlgebra, T2: TensorAlgebra, f: Matrix, g: Matrix, sign=1) -> LRMorphism:
    """``a (x) x (x) m -> sign * a (x) f(x) (x) g(m)``, checked to descend and to be a morphism."""
    a1, a2 = T1._amb, T2._amb
    fc = [f.column(j) for j in range(a1.nL)]
    gc = [g.column(k) for k in range(a1.nM)]

    def image_of_tensor(t: int) -> dict:
        i, j, k = a1.split(t)
        return a2.tensor(a1.A.basis(i), fc[j], gc[k], scale=sign)

    for r in T1.presentation._echelon.rows.values():
        v: dict = {}
        for t, x in r.items():
            for c, y in image_of_tensor(t).items():
                _acc(v, c, x * y)
        if not T2.presentation.in_relations_sparse(v):
            raise WellDefinednessError("map does not send relations to relations")
    mat = Matrix.from_columns([T2.presentation.project_sparse(image_of_tensor(t))
                               for t in T1.presentation.complement], T2.dim)
    phi = LRMorphism(T1.algebra, T2.algebra, mat)
    require_valid(validate_morphism(phi), "induced tensor map is not a morphism")
    return phi


def _swap_map(T1: TensorAlgebra, T2: TensorAlgebra, sign) -> LRMorphism:
    a1, a2 = T1._amb, T2._amb

    def image_of_tensor(t: int) -> dict:
        i, j, k = a1.split(t)
        return {a2.index(i, k, j): sign}

    for r in T1.presentation._echelon.rows.values():
        v: dict = {}
        for t, x in r.items():
            for c, y in image_of_tensor(t).items():
                _acc(v, c, x * y)
        if not T2.presentation.in_relations_sparse(v):
            raise WellDefinednessError("swap does not send relations to relations")
    mat = Matrix.from_columns([T2.presentation.project_sparse(image_of_tensor(t))
                               for t in T1.presentation.complement], T2.dim)
    return LRMorphism(T1.algebra, T2.algebra, mat)


@dataclass(frozen=True)
class SymmetryReport:
    forward: LRMorphism
    backward: LRMorphism
    sign: int
    rejected_signs: tuple

    @property
    def mutually_inverse(self) -> bool:
        n, m = self.forward.target.dim, self.forward.source.dim
        return (self.forward.matrix @ self.backward.matrix == Matrix.identity(n)
                and self.backward.matrix @ self.forward.matrix == Matrix.identity(m))


def symmetry_iso(pair: ActionPair) -> SymmetryReport:
    """``L (x) M -> M (x) L``, ``x (x) m -> sign (m (x) x)``.

    Both signs are tried.  A sign is accepted when the swap is a
    Lie-Rinehart morphism both ways and the two maps are mutually inverse;
    rejected signs are recorded in the report.
    """
    T1, T2 = tensor_product(pair), tensor_product(pair.swapped())
    accepted, rejected = [], []
    for sign in (-1, 1):
        fwd, bwd = _swap_map(T1, T2, sign), _swap_map(T2, T1, sign)
        rep = SymmetryReport(fwd, bwd, sign, ())
        if not validate_morphism(fwd) and not validate_morphism(bwd) and rep.mutually_inverse:
            accepted.append(rep)
        else:
            rejected.append(sign)
    if not accepted:
        raise AssertionError("no sign makes the swap an isomorphism")
    best = accepted[0]
    return SymmetryReport(best.forward, best.backward, best.sign, tuple(rejected))


def trivial_action_iso(T: TensorAlgebra) -> Matrix:
    """For trivial actions: the A-linear iso ``L (x) M -> A (x) L^ab (x) M^ab``.

    Returns the matrix of ``a (x) x (x) m -> a (x) [x] (x) [m]`` on quotient
    coordinates; it is checked to vanish on relations.
    """
    L, M = T.pair.L, T.pair.M
    QL, QM = abelianize(L), abelianize(M)
    amb = T._amb
    dLa, dMa = QL.dim, QM.dim
    tgt_dim = amb.dA * dLa * dMa
    pL = [QL.projection.column(j) for j in range(L.dim)]
    pM = [QM.projection.column(k) for k in range(M.dim)]

    def image_of_tensor(t: int):
        i, j, k = amb.split(t)
        out = [ZERO] * tgt_dim
        for p, x in _items(pL[j]):
            for q, y in _items(pM[k]):
                out[(i * dLa + p) * dMa + q] += x * y
        return out

    for r in T.presentation._echelon.rows.values():
        acc = [ZERO] * tgt_dim
        for t, x in r.items():
            acc = [p + x * q for p, q in zip(acc, image_of_tensor(t))]
        if any(acc):
            raise WellDefinednessError("abelianization map does not vanish on relations")
    return Matrix.from_columns([image_of_tensor(t) for t in T.presentation.complement], tgt_dim)


# ---------------------------------------------------------------- hat-tensor


@dataclass(frozen=True)
class HatTensor:
    tensor: TensorAlgebra
    uce: UceAlgebra
    to_uce: LRMorphism
    from_uce: LRMorphism
    central: bool

    @property
    def mutually_inverse(self) -> bool:
        a, b = self.to_uce.matrix, self.from_uce.matrix
        return (a.rows == a.cols and a @ b == Matrix.identity(a.rows)
                and b @ a == Matrix.identity(b.rows))

    @property
    def kernels_match(self) -> bool:
        K_hat = self.tensor.mu.kernel()
        return image_of(self.to_uce.matrix, K_hat) == self.uce.kernel and K_hat.rank == self.uce.kernel.rank


def hat_tensor(L: LieRinehartAlgebra, check: bool = True) -> HatTensor:
    """The hat-tensor of a perfect algebra and explicit isomorphisms with ``uce_A(L)``.

    ``from_uce`` is the universal lift of the identity along ``mu``; ``to_uce``
    factors the pairing ``(x, y) -> class of 1 (x) x (x) y`` through the hat-tensor.
    """
    if not is_perfect(L):
        raise ValueError("the hat-tensor description needs a perfect algebra")
    pair = self_actions(L)
    require_valid(validate_pair(pair) + check_compatible(pair), "bracket self-action is not compatible")
    T = _build(pair, True, check, f"{L.name}(^){L.name}")
    central = bool(central_witness(T.mu))
    U = build_uce(L)
    from_uce = universal_lift(LRMorphism.identity(L), T.mu, U)
    f = tuple(tuple(U.element(L.base.unit, L.basis(j), L.basis(k)) for k in range(L.dim)) for j in range(L.dim))
    to_uce = factor_pairing(T, U.algebra, f).morphism
    return HatTensor(T, U, to_uce, from_uce, central)


# ---------------------------------------------------------------- exactness


@dataclass(frozen=True)
class ExactnessReport:
    hypotheses: tuple
    dims: dict
    image_equals_kernel: bool
    surjective: bool

    @property
    def exact(self) -> bool:
        return self.image_equals_kernel and self.surjective


def _preserves(f: LRMorphism, src: ActionPair, tgt: ActionPair) -> list:
    """``f(^p l) = ^p f(l)`` and ``^l p = ^{f(l)} p`` on basis instances."""
    rep = []
    P = src.M
    for p in range(P.dim):
        for l in range(f.source.dim):
            if f(src.m_on_l[p][l]) != tgt.ml(P.basis(p), f.matrix.column(l)):
                rep.append(Violation("preserve.action_on", (p, l)))
            if src.l_on_m[l][p] != tgt.lm(f.matrix.column(l), P.basis(p)):
                rep.append(Violation("preserve.action_by", (l, p)))
    return rep


def tensor_exactness(f: LRMorphism, g: LRMorphism, pL: ActionPair, pM: ActionPair, pN: ActionPair) -> ExactnessReport:
    """Exactness of ``L (x) P -> M (x) P -> N (x) P`` for ``L -f-> M -g-> N``.

    Each pair has P as its second algebra.  Raises ``AxiomError`` if the
    actions are invalid, incompatible or not preserved, and ``ValueError`` if
    the input sequence is not exact at M with g onto.
    """
    if not (pL.M == pM.M == pN.M):
        raise ValueError("all three pairs must act with the same algebra P")
    if not (f.image() == g.kernel() and g.is_surjective()):
        raise ValueError("input sequence is not exact at the middle term with g onto")
    hyp = []
    for pr in (pL, pM, pN):
        hyp += validate_pair(pr) + check_compatible(pr)
    hyp += _preserves(f, pL, pM) + _preserves(g, pM, pN)
    require_valid(hyp, "exactness hypotheses fail")
    TL, TM, TN = tensor_product(pL), tensor_product(pM), tensor_product(pN)
    P = pL.M
    one = Matrix.identity(P.dim)
    f1 = tensor_map(TL, TM, f.matrix, one)
    g1 = tensor_map(TM, TN, g.matrix, one)
    return ExactnessReport(tuple(hyp), {"L(x)P": TL.dim, "M(x)P": TM.dim, "N(x)P": TN.dim},
                           f1.image() == g1.kernel(), g1.is_surjective())


__all__ = [
    "ActionPair", "self_actions", "bracket_actions", "validate_action", "validate_pair",
    "check_compatible", "CrossedModule", "validate_crossed_module", "inclusion_crossed_module",
    "kernel_crossed_module", "module_crossed_module", "crossed_module_actions", "validate_pairing",
    "TensorAlgebra", "tensor_product", "PairingFactor", "factor_pairing", "tensor_map",
    "SymmetryReport", "symmetry_iso", "trivial_action_iso", "HatTensor", "hat_tensor",
    "ExactnessReport", "tensor_exactness",
]
