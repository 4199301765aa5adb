"""Rinehart cochain/chain complexes in low degrees and the Chevalley-Eilenberg oracle.

An alternating K-multilinear map ``L^n -> M`` is stored by its values on
increasing basis tuples; coordinate ``t * dim M + m`` is the ``m``-th
component of ``f(x_I)`` for the ``t``-th increasing tuple ``I`` in
``itertools.combinations`` order.  Chains use the same index layout for
``M (x) Lambda^n_K L``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra import (
    LeftLRModule, LieRinehartAlgebra, RightLRModule, require_valid, trivial_left_module,
    validate_left_module, validate_right_module,
)
from .constructions import LieAlgebraOverK, transformation_algebra
from .exactlin import (
    ZERO, Echelon, Matrix, QuotientPresentation, Subspace, kernel, quotient,
)

DEGREE_ENV = "LIERINEHART_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 3


def max_degree() -> int:
    raw = os.environ.get(DEGREE_ENV)
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{DEGREE_ENV} must be an integer, got {raw!r}") from None


def _check_degree(n: int, slack: int = 0):
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > max_degree() + slack:
        raise ValueError(f"degree {n} exceeds the cap {max_degree()} (raise {DEGREE_ENV})")


def _sort_sign(idx: Sequence[int]) -> tuple:
    """Sorted tuple and permutation sign; sign 0 on a repeated index."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return tuple(sorted(idx)), 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return tuple(sorted(idx)), sign


@lru_cache(maxsize=None)
def _tuples(dim: int, n: int) -> tuple:
    tups = tuple(combinations(range(dim), n))
    return tups, {t: i for i, t in enumerate(tups)}


class _Wedge:
    """Coordinates on ``M (x) Lambda^n_K L`` (equivalently alternating maps)."""

    def __init__(self, ldim: int, mdim: int, n: int):
        self.ldim, self.mdim, self.n = ldim, mdim, n
        self.tuples, self.pos = _tuples(ldim, n)
        self.dim = len(self.tuples) * mdim

    def coord(self, tup: tuple, m: int) -> int:
        return self.pos[tup] * self.mdim + m

    def add_wedge(self, out: dict, mvec, first, rest: Sequence[int], scale=1):
        """Add ``scale * mvec (x) (first, x_rest)`` where ``first`` is a vector of L."""
        for i, c in enumerate(first):
            if not c:
                continue
            tup, sgn = _sort_sign((i,) + tuple(rest))
            if not sgn:
                continue
            base = self.pos[tup] * self.mdim
            for m, x in enumerate(mvec):
                if x:
                    k = base + m
                    y = out.get(k, ZERO) + scale * sgn * c * x
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)


# ---------------------------------------------------------------- cochains


@dataclass(frozen=True)
class CochainSpace:
    """``C^n_A(L, M)``: alternating A-multilinear maps, as a subspace of all alternating maps."""

    degree: int
    ambient_dim: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.rank

    @property
    def basis(self) -> tuple:
        return self.space.basis


def _evaluate(W: _Wedge, f: Sequence, first, rest: Sequence[int]):
    """``f(first, x_rest)`` for an alternating map ``f`` given in ``W`` coordinates."""
    out = [ZERO] * W.mdim
    for i, c in enumerate(first):
        if not c:
            continue
        tup, sgn = _sort_sign((i,) + tuple(rest))
        if not sgn:
            continue
        base = W.pos[tup] * W.mdim
        for m in range(W.mdim):
            x = f[base + m]
            if x:
                out[m] += sgn * c * x
    return out


def _cochain_space(L: LieRinehartAlgebra, M: LeftLRModule, n: int) -> CochainSpace:
    W = _Wedge(L.dim, M.dim, n)
    if n == 0:
        return CochainSpace(0, W.dim, Subspace.full(W.dim))
    # f(a x_i, x_J) - a f(x_i, x_J) = 0, one row per output coordinate
    rows = []
    rests = _tuples(L.dim, n - 1)[0]
    for l in range(L.base.dim):
        aop = M.a_ops[l]
        for i in range(L.dim):
            ax = L.a_action[l][i]
            for J in rests:
                for out in range(M.dim):
                    row: dict = {}
                    # f(a x_i, x_J)[out]
                    for k, c in enumerate(ax):
                        if c:
                            tup, sgn = _sort_sign((k,) + J)
                            if sgn:
                                key = W.coord(tup, out)
                                row[key] = row.get(key, ZERO) + sgn * c
                    # - (a f(x_i, x_J))[out]
                    tup, sgn = _sort_sign((i,) + J)
                    for m in range(M.dim if sgn else 0):
                        c = aop.entries[out][m]
                        if c:
                            key = W.coord(tup, m)
                            row[key] = row.get(key, ZERO) - sgn * c
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rows.append(row)
    ech = Echelon(W.dim)
    for r in rows:
        ech.add_sparse(r)
    cons = ech.to_subspace()
    if cons.rank == 0:
        return CochainSpace(n, W.dim, Subspace.full(W.dim))
    return CochainSpace(n, W.dim, kernel(cons.basis_matrix()))


def cochain_space(L: LieRinehartAlgebra, M: LeftLRModule, n: int) -> CochainSpace:
    _check_degree(n)
    return _cochain_space(L, M, n)


def _coboundary_ambient(L: LieRinehartAlgebra, M: LeftLRModule, n: int, f: Sequence) -> tuple:
    """``delta f`` in degree ``n + 1`` alternating coordinates."""
    Wn, Wn1 = _Wedge(L.dim, M.dim, n), _Wedge(L.dim, M.dim, n + 1)
    out = [ZERO] * Wn1.dim
    for tup in Wn1.tuples:
        val = [ZERO] * M.dim
        for p in range(n + 1):
            rest = tup[:p] + tup[p + 1:]
            if n == 0:
                fv = f[:M.dim]
            else:
                fv = _evaluate(Wn, f, _unit(L.dim, rest[0]), rest[1:])
            xm = M.l_ops[tup[p]].apply(fv)
            s = 1 if p % 2 == 0 else -1
            val = [v + s * y for v, y in zip(val, xm)]
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                rest = tup[:p] + tup[p + 1:q] + tup[q + 1:]
                fv = _evaluate(Wn, f, L.bracket[tup[p]][tup[q]], rest)
                s = 1 if (p + q) % 2 == 0 else -1
                val = [v + s * y for v, y in zip(val, fv)]
        base = Wn1.pos[tup] * M.dim
        out[base:base + M.dim] = val
    return tuple(out)


@lru_cache(maxsize=None)
def _unit(n: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(n))


@lru_cache(maxsize=256)
def _complex_piece(L: LieRinehartAlgebra, M: LeftLRModule, n: int) -> tuple:
    Cn = _cochain_space(L, M, n)
    Cn1 = _cochain_space(L, M, n + 1)
    cols = []
    for f in Cn.basis:
        g = _coboundary_ambient(L, M, n, f)
        if not Cn1.space.contains(g):
            raise AssertionError(f"coboundary of a degree-{n} cochain is not A-multilinear")
        cols.append(Cn1.space.coords(g))
    return Cn, Cn1, Matrix.from_columns(cols, Cn1.dim) if cols else Matrix.zeros(Cn1.dim, 0)


def coboundary(L: LieRinehartAlgebra, M: LeftLRModule, n: int) -> Matrix:
    """Matrix of ``delta: C^n -> C^{n+1}`` in the canonical cochain bases (K-linear only)."""
    _check_degree(n)
    require_valid(validate_left_module(M), "invalid left module")
    return _complex_piece(L, M, n)[2]


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim: int
    cocycles: Subspace
    representatives: tuple  # cocycles in C^n coordinates spanning a complement of the coboundaries


def cohomology(L: LieRinehartAlgebra, M: LeftLRModule, n: int) -> CohomologyResult:
    _check_degree(n)
    require_valid(validate_left_module(M), "invalid left module")
    Cn, _, d = _complex_piece(L, M, n)
    Z = kernel(d) if d.cols else Subspace.zero(0)
    if n == 0:
        B = Subspace.zero(Cn.dim)
    else:
        dprev = _complex_piece(L, M, n - 1)[2]
        B = Subspace.span(dprev.columns(), Cn.dim) if dprev.cols else Subspace.zero(Cn.dim)
    ech = B.echelon()
    reps = []
    for z in Z.basis:
        if ech.add(z):
            reps.append(z)
    return CohomologyResult(n, Z.rank - B.rank, Z, tuple(reps))


def invariants(L: LieRinehartAlgebra, M: LeftLRModule) -> Subspace:
    """``M^L = {m : x m = 0 for all x}`` computed directly."""
    rows = [r for op in M.l_ops for r in op.entries]
    return kernel(Matrix(len(rows), M.dim, tuple(rows))) if rows else Subspace.full(M.dim)


# ---------------------------------------------------------------- Der_A(L, M)


@dataclass(frozen=True)
class DerModule:
    derivations: Subspace  # flattened dim M x dim L matrices, row-major
    inner: Subspace
    h0: int
    h1: int
    module_dim: int

    @property
    def identity_holds(self) -> bool:
        return self.derivations.rank == (self.module_dim - self.h0) + self.h1

    @property
    def quotient_matches_h1(self) -> bool:
        return self.derivations.rank - self.inner.rank == self.h1


def der_module(L: LieRinehartAlgebra, M: LeftLRModule) -> DerModule:
    """A-linear Lie derivations ``L -> M``, inner derivations, and the low-degree sequence."""
    require_valid(validate_left_module(M), "invalid left module")
    dm, dl = M.dim, L.dim
    N = dm * dl
    rows = []

    def entry(r, c):
        return r * dl + c

    # A-linearity: d(a x_j) = a d(x_j)
    for l in range(L.base.dim):
        for j in range(dl):
            for out in range(dm):
                row = [ZERO] * N
                for k, c in enumerate(L.a_action[l][j]):
                    row[entry(out, k)] += c
                for m in range(dm):
                    row[entry(m, j)] -= M.a_ops[l].entries[out][m]
                rows.append(row)
    # d([x_i, x_j]) = x_i d(x_j) - x_j d(x_i)
    for i in range(dl):
        for j in range(i + 1, dl):
            for out in range(dm):
                row = [ZERO] * N
                for k, c in enumerate(L.bracket[i][j]):
                    row[entry(out, k)] += c
                for m in range(dm):
                    row[entry(m, j)] -= M.l_ops[i].entries[out][m]
                    row[entry(m, i)] += M.l_ops[j].entries[out][m]
                rows.append(row)
    D = kernel(Matrix.from_rows(rows, N)) if rows else Subspace.full(N)
    inner = Subspace.span([[M.l_ops[c].entries[r][m] for r in range(dm) for c in range(dl)]
                           for m in range(dm)], N)
    h0 = cohomology(L, M, 0).dim
    h1 = cohomology(L, M, 1).dim
    return DerModule(D, inner, h0, h1, dm)


# ---------------------------------------------------------------- chains


@dataclass(frozen=True)
class ChainSpace:
    """``M (x)_A Lambda^n_A L`` presented over ``M (x)_K Lambda^n_K L``."""

    degree: int
    presentation: QuotientPresentation

    @property
    def dim(self) -> int:
        return self.presentation.dim


def _chain_relations(L: LieRinehartAlgebra, M: RightLRModule, n: int) -> list:
    W = _Wedge(L.dim, M.dim, n)
    gens = []
    if n == 0:
        return gens
    rests = _tuples(L.dim, n - 1)[0]
    for l in range(L.base.dim):
        for m in range(M.dim):
            em = _unit(M.dim, m)
            am = M.a_ops[l].apply(em)
            for i in range(L.dim):
                ax = L.a_action[l][i]
                for J in rests:
                    # a m (x) (x_i, x_J) - m (x) (a x_i, x_J)
                    v: dict = {}
                    W.add_wedge(v, am, _unit(L.dim, i), J)
                    W.add_wedge(v, em, ax, J, scale=-1)
                    if v:
                        gens.append(v)
        if n >= 2:
            pairs_rest = _tuples(L.dim, n - 2)[0]
            for m in range(M.dim):
                em = _unit(M.dim, m)
                for i in range(L.dim):
                    for j in range(L.dim):
                        for K in pairs_rest:
                            # m (x) (a x_i, x_j, x_K) - m (x) (x_i, a x_j, x_K)
                            v = {}
                            ax = L.a_action[l][i]
                            for k, c in enumerate(ax):
                                if c:
                                    W.add_wedge(v, [c * x for x in em], _unit(L.dim, k), (j,) + K)
                            ay = L.a_action[l][j]
                            for k, c in enumerate(ay):
                                if c:
                                    W.add_wedge(v, [-c * x for x in em], _unit(L.dim, i), (k,) + K)
                            if v:
                                gens.append(v)
    return gens


@lru_cache(maxsize=256)
def _chain_space(L: LieRinehartAlgebra, M: RightLRModule, n: int) -> ChainSpace:
    W = _Wedge(L.dim, M.dim, n)
    ech = Echelon(W.dim)
    for g in _chain_relations(L, M, n):
        ech.add_sparse(g)
    return ChainSpace(n, quotient(W.dim, ech.to_subspace()))


def _boundary_ambient(L: LieRinehartAlgebra, M: RightLRModule, n: int, v: dict) -> dict:
    Wn1 = _Wedge(L.dim, M.dim, n - 1)
    Wn = _Wedge(L.dim, M.dim, n)
    out: dict = {}
    for key, coef in v.items():
        t, m = divmod(key, M.dim)
        tup = Wn.tuples[t]
        em = _unit(M.dim, m)
        for p in range(n):
            rest = tup[:p] + tup[p + 1:]
            mx = M.r_ops[tup[p]].apply(em)
            s = coef if p % 2 == 0 else -coef
            if n == 1:
                for k, c in enumerate(mx):
                    if c:
                        y = out.get(k, ZERO) + s * c
                        if y:
                            out[k] = y
                        else:
                            out.pop(k, None)
            else:
                Wn1.add_wedge(out, mx, _unit(L.dim, rest[0]), rest[1:], scale=s)
        for p in range(n):
            for q in range(p + 1, n):
                rest = tup[:p] + tup[p + 1:q] + tup[q + 1:]
                s = coef if (p + q) % 2 == 0 else -coef
                Wn1.add_wedge(out, em, L.bracket[tup[p]][tup[q]], rest, scale=s)
    return out


@lru_cache(maxsize=256)
def _boundary_piece(L: LieRinehartAlgebra, M: RightLRModule, n: int) -> tuple:
    Cn = _chain_space(L, M, n)
    Cn1 = _chain_space(L, M, n - 1)
    Pn, Pn1 = Cn.presentation, Cn1.presentation
    for r in Pn._echelon.rows.values():
        if not Pn1.in_relations_sparse(_boundary_ambient(L, M, n, r)):
            raise AssertionError(f"boundary in degree {n} does not respect the A-relations")
    cols = [Pn1.project_sparse(_boundary_ambient(L, M, n, {c: 1})) for c in Pn.complement]
    d = Matrix.from_columns(cols, Cn1.dim) if cols else Matrix.zeros(Cn1.dim, 0)
    return Cn, Cn1, d


def chain_boundary(L: LieRinehartAlgebra, M: RightLRModule, n: int) -> tuple:
    """``(C_n, C_{n-1}, d_n)``; the well-definedness check runs on every call that builds it."""
    if n < 1:
        raise ValueError("boundary is defined for n >= 1")
    _check_degree(n)
    require_valid(validate_right_module(M), "invalid right module")
    return _boundary_piece(L, M, n)


def homology(L: LieRinehartAlgebra, M: RightLRModule, n: int) -> int:
    _check_degree(n)
    require_valid(validate_right_module(M), "invalid right module")
    Cn = _chain_space(L, M, n)
    out_rank = _boundary_piece(L, M, n)[2].rank() if n >= 1 else 0
    in_rank = _boundary_piece(L, M, n + 1)[2].rank()
    return Cn.dim - out_rank - in_rank


def coinvariants_dim(M: RightLRModule) -> int:
    """``dim M / M L`` computed directly."""
    vecs = [op.column(m) for op in M.r_ops for m in range(M.dim)]
    return M.dim - Subspace.span(vecs, M.dim).rank


# ---------------------------------------------------------------- Chevalley-Eilenberg oracle


def ce_cohomology(g: LieAlgebraOverK, rho: Sequence[Matrix] | None, n: int, mdim: int = 1) -> int:
    """``dim H^n_CE(g, M)`` over K for the representation ``rho`` (None = trivial of dim ``mdim``).

    Written separately from the Rinehart code: cochains are indexed by
    ``(tuple, m)`` dictionaries and the differential is assembled from an
    explicit sum over ordered insertions.
    """
    _check_degree(n)
    if rho is None:
        rho = [Matrix.zeros(mdim, mdim)] * g.dim
    mdim = rho[0].rows if rho else mdim

    def diff(k: int) -> Matrix:
        src = list(combinations(range(g.dim), k))
        dst = list(combinations(range(g.dim), k + 1))
        sidx = {t: i for i, t in enumerate(src)}
        mat = [[ZERO] * (len(src) * mdim) for _ in range(len(dst) * mdim)]
        for r, tup in enumerate(dst):
            for p, xp in enumerate(tup):
                rest = tup[:p] + tup[p + 1:]
                sign = (-1) ** p
                c0 = sidx[rest]
                for a in range(mdim):
                    for b in range(mdim):
                        v = rho[xp].entries[a][b]
                        if v:
                            mat[r * mdim + a][c0 * mdim + b] += sign * v
            for p in range(len(tup)):
                for q in range(p + 1, len(tup)):
                    rest = tup[:p] + tup[p + 1:q] + tup[q + 1:]
                    sign = (-1) ** (p + q)
                    for z, c in enumerate(g.bracket[tup[p]][tup[q]]):
                        if not c or z in rest:
                            continue
                        full = (z,) + rest
                        inv = sum(1 for w in rest if w < z)
                        col = sidx[tuple(sorted(full))]
                        for a in range(mdim):
                            mat[r * mdim + a][col * mdim + a] += sign * c * (-1) ** inv
        return Matrix(len(dst) * mdim, len(src) * mdim, tuple(tuple(row) for row in mat))

    dim_n = len(list(combinations(range(g.dim), n))) * mdim
    rank_out = diff(n).rank() if dim_n else 0
    rank_in = diff(n - 1).rank() if n >= 1 else 0
    return dim_n - rank_out - rank_in


def rinehart_vs_ce(g: LieAlgebraOverK, A, gamma=None, degrees=(0, 1, 2), module: LeftLRModule | None = None) -> dict:
    """Compare Rinehart cohomology of ``A (x) g`` with CE cohomology of ``g``.

    Default coefficients: the trivial 1-dimensional module (A via its
    augmentation, g acting by zero).  A supplied module is restricted to g
    along ``x -> 1 (x) x`` for the CE side.
    """
    L = transformation_algebra(g, A, gamma)
    M = module or trivial_left_module(L)
    dg = g.dim
    rho = []
    for j in range(dg):
        op = Matrix.zeros(M.dim, M.dim)
        for i, c in enumerate(A.unit):
            if c:
                op = op + M.l_ops[i * dg + j].scale(c)
        rho.append(op)
    out = {"algebra": L.name, "degrees": list(degrees), "rinehart": [], "ce": []}
    for n in degrees:
        out["rinehart"].append(cohomology(L, M, n).dim)
        out["ce"].append(ce_cohomology(g, rho, n, M.dim))
    out["equal"] = out["rinehart"] == out["ce"]
    return out


__all__ = [
    "DEGREE_ENV", "max_degree", "CochainSpace", "cochain_space", "coboundary", "cohomology",
    "CohomologyResult", "invariants", "DerModule", "der_module", "ChainSpace", "chain_boundary",
    "homology", "coinvariants_dim", "ce_cohomology", "rinehart_vs_ce",
]
