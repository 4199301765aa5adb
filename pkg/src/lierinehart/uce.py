"""The universal central extension ``uce_A(L) = A (x) L (x) L / M_A L``.

Ambient coordinates: basis tensor ``a_i (x) x_j (x) x_k`` has index
``(i * n + j) * n + k`` with ``n = dim L``.  Everything is computed on sparse
dict vectors over this ambient space and pushed to the quotient through the
canonical section.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    LieRinehartAlgebra, LRMorphism, center, commutator, is_perfect, quotient_algebra,
    require_valid, validate_lr, validate_morphism,
)
from .constructions import (
    CentralExtensionWitness, central_witness, exp_nilpotent, free_module, is_nilpotent,
    pullback_extension, transport, trivial_central_product,
)
from .exactlin import (
    ZERO, Echelon, Matrix, Subspace, close_under_sparse, preimage, quotient, solve, solve_vec,
    vstack,
)

# ---------------------------------------------------------------- sparse tensors


def _items(v):
    return [(i, c) for i, c in enumerate(v) if c]


def _acc(out: dict, key: int, c):
    y = out.get(key, ZERO) + c
    if y:
        out[key] = y
    else:
        out.pop(key, None)


class _Ambient:
    """Index arithmetic and the raw bracket on ``A (x) L (x) L``."""

    def __init__(self, L: LieRinehartAlgebra):
        self.L = L
        self.A = L.base
        self.n = L.dim
        self.dA = L.base.dim
        self.dim = self.dA * self.n * self.n
        n = self.n
        self.br_items = [[_items(L.bracket[j][k]) for k in range(n)] for j in range(n)]
        self.br_anchor = [[L.anchor_of(L.bracket[j][k]) for k in range(n)] for j in range(n)]
        self._bracket_cache: dict = {}

    def index(self, i, j, k) -> int:
        return (i * self.n + j) * self.n + k

    def split(self, t: int) -> tuple:
        ij, k = divmod(t, self.n)
        i, j = divmod(ij, self.n)
        return i, j, k

    def tensor(self, a, u, v, out=None, scale=1) -> dict:
        out = {} if out is None else out
        ai, ui, vi = _items(a), _items(u), _items(v)
        for i, x in ai:
            for j, y in ui:
                xy = x * y * scale
                for k, z in vi:
                    _acc(out, self.index(i, j, k), xy * z)
        return out

    def bracket_basis(self, t1: int, t2: int) -> dict:
        key = (t1, t2)
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        A, L = self.A, self.L
        i, j, k = self.split(t1)
        i2, j2, k2 = self.split(t2)
        out: dict = {}
        u, u2 = L.bracket[j][k], L.bracket[j2][k2]
        if any(u) and any(u2):
            self.tensor(A.mult[i][i2], u, u2, out)
        d = self.br_anchor[j][k].column(i2)
        if any(d):
            self.tensor(A.basis_mult[i].apply(d), L.basis(j2), L.basis(k2), out)
        d2 = self.br_anchor[j2][k2].column(i)
        if any(d2):
            self.tensor(A.basis_mult[i2].apply(d2), L.basis(j), L.basis(k), out, scale=-1)
        self._bracket_cache[key] = out
        return out

    def bracket(self, r: dict, s: dict) -> dict:
        out: dict = {}
        for t1, x in r.items():
            for t2, y in s.items():
                for c, z in self.bracket_basis(t1, t2).items():
                    _acc(out, c, x * y * z)
        return out

    def act(self, l: int, t: int) -> dict:
        """``a_l`` times the basis tensor ``t`` (first factor)."""
        i, j, k = self.split(t)
        return {self.index(m, j, k): c for m, c in _items(self.A.mult[l][i])}

    def act_sparse(self, l: int, v: dict) -> dict:
        out: dict = {}
        for t, x in v.items():
            for c, y in self.act(l, t).items():
                _acc(out, c, x * y)
        return out

    def to_L(self, t: int):
        """``a_i [x_j, x_k]`` as a dense vector of L."""
        i, j, k = self.split(t)
        return self.L.a_ops[i].apply(self.L.bracket[j][k])

    def anchor(self, t: int) -> Matrix:
        i, j, k = self.split(t)
        return self.A.basis_mult[i] @ self.br_anchor[j][k]


# ---------------------------------------------------------------- M_A L


@dataclass(frozen=True)
class RelationSpan:
    """``M_A L`` inside ``A (x) L (x) L``."""

    ambient_dim: int
    span: Subspace
    generators: int

    @property
    def rank(self) -> int:
        return self.span.rank


def _relation_echelon(amb: _Ambient) -> tuple:
    L, A, n, dA = amb.L, amb.A, amb.n, amb.dA
    ech = Echelon(amb.dim)
    count = 0

    def add(v: dict):
        nonlocal count
        count += 1
        if v:
            ech.add_sparse(v)

    for i in range(dA):
        # alternating: a (x) x (x) x on the basis diagonal; cross terms come from the symmetric sums
        for j in range(n):
            add({amb.index(i, j, j): 1})
        # symmetric sums: a (x) x (x) y + a (x) y (x) x
        for j in range(n):
            for k in range(j + 1, n):
                add({amb.index(i, j, k): 1, amb.index(i, k, j): 1})
        # cyclic Jacobi-type sums
        a = A.basis(i)
        for j in range(n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    v: dict = {}
                    amb.tensor(a, L.basis(j), L.bracket[k][l], v)
                    amb.tensor(a, L.basis(k), L.bracket[l][j], v)
                    amb.tensor(a, L.basis(l), L.bracket[j][k], v)
                    add(v)
        # anchor twist: a (x) [x,y] (x) [x',y'] + [x,y](a) (x) x' (x) y' - 1 (x) [x,y] (x) a[x',y']
        for j in range(n):
            for k in range(j + 1, n):
                u = L.bracket[j][k]
                du = amb.br_anchor[j][k].column(i)
                for p in range(n):
                    for q in range(p + 1, n):
                        w = L.bracket[p][q]
                        v = {}
                        amb.tensor(a, u, w, v)
                        if any(du):
                            amb.tensor(du, L.basis(p), L.basis(q), v)
                        amb.tensor(A.unit, u, L.a_ops[i].apply(w), v, scale=-1)
                        add(v)
    seeds = [dict(r) for r in ech.rows.values()]
    if dA > 1:
        close_under_sparse(ech, seeds, lambda v: [amb.act_sparse(l, v) for l in range(dA)])
    return ech, count


def relation_span(L: LieRinehartAlgebra) -> RelationSpan:
    amb = _Ambient(L)
    ech, count = _relation_echelon(amb)
    return RelationSpan(amb.dim, ech.to_subspace(), count)


# ---------------------------------------------------------------- uce_A(L)


@dataclass(frozen=True)
class UceAlgebra:
    source: LieRinehartAlgebra
    relations: RelationSpan
    presentation: object  # QuotientPresentation
    algebra: LieRinehartAlgebra
    uce_morphism: LRMorphism
    _amb: _Ambient = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def kernel(self) -> Subspace:
        return self.uce_morphism.kernel()

    def project_tensor(self, i: int, j: int, k: int):
        """Class of ``(a_i, x_j, x_k)`` in quotient coordinates."""
        return self.presentation.project_sparse({self._amb.index(i, j, k): 1})

    def element(self, a, x, y):
        """Class of ``a (x) x (x) y`` for arbitrary coordinate vectors."""
        return self.presentation.project_sparse(self._amb.tensor(a, x, y))


class WellDefinednessError(AssertionError):
    pass


def _check_well_defined(amb: _Ambient, Q) -> None:
    rows = [dict(r) for r in Q._echelon.rows.values()]
    for r in rows:
        img = [ZERO] * amb.n
        anc = Matrix.zeros(amb.dA, amb.dA)
        for t, x in r.items():
            img = [p + x * q for p, q in zip(img, amb.to_L(t))]
            anc = anc + amb.anchor(t).scale(x)
        if any(img):
            raise WellDefinednessError("uce map does not vanish on a relation")
        if not anc.is_zero():
            raise WellDefinednessError("anchor does not vanish on a relation")
        for t in range(amb.dim):
            for v in (amb.bracket(r, {t: 1}), amb.bracket({t: 1}, r)):
                if not Q.in_relations_sparse(v):
                    raise WellDefinednessError(f"bracket leaves M_A L at basis tensor {amb.split(t)}")


@lru_cache(maxsize=64)
def build_uce(L: LieRinehartAlgebra, check: bool = True) -> UceAlgebra:
    """``uce_A(L)`` with bracket, anchor, A-action and the map ``uce``.

    With ``check`` the bracket, anchor and ``uce`` are verified to descend
    through ``M_A L`` (every relation basis vector against every ambient basis
    tensor) and the result is validated.
    """
    amb = _Ambient(L)
    ech, count = _relation_echelon(amb)
    span = ech.to_subspace()
    Q = quotient(amb.dim, span)
    if check:
        _check_well_defined(amb, Q)
    reps = Q.complement
    A = L.base
    a_action = tuple(tuple(Q.project_sparse(amb.act(l, t)) for t in reps) for l in range(A.dim))
    bracket = tuple(tuple(Q.project_sparse(amb.bracket_basis(t1, t2)) for t2 in reps) for t1 in reps)
    anchor = tuple(amb.anchor(t) for t in reps)
    lab = L.labels or tuple(str(i) for i in range(L.dim))
    labels = tuple(f"({i},{lab[j]},{lab[k]})" for i, j, k in map(amb.split, reps))
    U = LieRinehartAlgebra(A, Q.dim, a_action, bracket, anchor, f"uce({L.name})", labels)
    if check:
        require_valid(validate_lr(U), "uce algebra failed validation")
    umat = Matrix.from_columns([amb.to_L(t) for t in reps], L.dim)
    u = LRMorphism(U, L, umat)
    if check:
        require_valid(validate_morphism(u), "uce map is not a morphism")
    return UceAlgebra(L, RelationSpan(amb.dim, span, count), Q, U, u, amb)


def uce_on_morphism(f: LRMorphism, UL: UceAlgebra | None = None, UM: UceAlgebra | None = None) -> LRMorphism:
    """``uce_A(f): (a, x, y) -> (a, f x, f y)``."""
    UL = UL or build_uce(f.source)
    UM = UM or build_uce(f.target)
    aL, aM = UL._amb, UM._amb
    F = f.matrix
    cols = [F.column(j) for j in range(f.source.dim)]

    def image(t: int) -> dict:
        i, j, k = aL.split(t)
        return aM.tensor(f.source.base.basis(i), cols[j], cols[k])

    for r in UL.presentation._echelon.rows.values():
        v: dict = {}
        for t, x in r.items():
            for c, y in image(t).items():
                _acc(v, c, x * y)
        if not UM.presentation.in_relations_sparse(v):
            raise WellDefinednessError("f (x) f does not map M_A L into M_A M")
    mat = Matrix.from_columns([UM.presentation.project_sparse(image(t)) for t in UL.presentation.complement],
                              UM.dim)
    return LRMorphism(UL.algebra, UM.algebra, mat)


def is_central(p: LRMorphism) -> CentralExtensionWitness:
    return central_witness(p)


# ---------------------------------------------------------------- lifts


def linear_section(p: LRMorphism) -> Matrix:
    """Canonical linear section of a surjection (pivot-based particular solution)."""
    s = solve(p.matrix, Matrix.identity(p.target.dim))
    if s is None:
        raise ValueError("map is not surjective")
    return s


def universal_lift(f: LRMorphism, g: LRMorphism, UL: UceAlgebra | None = None) -> LRMorphism:
    """The morphism ``uce_A(L) -> M'`` over ``f``, given a central ``g: M' -> M``.

    ``(a, x, y) -> a [s f(x), s f(y)]`` with ``s`` a linear section of ``g``.
    """
    if f.target.dim != g.target.dim:
        raise ValueError("g must be an extension of the target of f")
    if not central_witness(g):
        raise ValueError("g is not a central extension")
    UL = UL or build_uce(f.source)
    amb = UL._amb
    E = g.source
    sf = linear_section(g) @ f.matrix
    lifts = [sf.column(j) for j in range(f.source.dim)]

    def value(t: int):
        i, j, k = amb.split(t)
        return E.a_ops[i].apply(E.br(lifts[j], lifts[k]))

    for r in UL.presentation._echelon.rows.values():
        acc = [ZERO] * E.dim
        for t, x in r.items():
            acc = [p + x * q for p, q in zip(acc, value(t))]
        if any(acc):
            raise WellDefinednessError("lift does not vanish on M_A L")
    mat = Matrix.from_columns([value(t) for t in UL.presentation.complement], E.dim)
    phi = LRMorphism(UL.algebra, E, mat)
    require_valid(validate_morphism(phi), "universal lift is not a morphism")
    if g.matrix @ mat != f.matrix @ UL.uce_morphism.matrix:
        raise AssertionError("lift diagram does not commute")
    return phi


@dataclass(frozen=True)
class LiftSolution:
    """All morphisms ``phi: S -> E`` with ``p o phi = h``.

    ``particular`` is one solution (or None); ``freedom`` is the dimension of
    the solution space, so a unique solution has ``freedom == 0``.
    """

    particular: LRMorphism | None
    freedom: int

    @property
    def exists(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.exists and self.freedom == 0


def _coeff_block(P: Matrix, Q: Matrix, krows: int, ucols: int) -> Matrix:
    """Matrix of ``T -> P T Q`` with ``T`` flattened row-major (krows x ucols)."""
    rows = []
    for a in range(P.rows):
        for b in range(Q.cols):
            row = [ZERO] * (krows * ucols)
            for r in range(krows):
                x = P.entries[a][r]
                if x:
                    for c in range(ucols):
                        y = Q.entries[c][b]
                        if y:
                            row[r * ucols + c] += x * y
            rows.append(row)
    return Matrix(len(rows), krows * ucols, tuple(tuple(r) for r in rows))


def solve_lifts(h: LRMorphism, p: LRMorphism) -> LiftSolution:
    """Solve for LR morphisms ``phi`` with ``p o phi = h`` when ``p`` is central.

    Writes ``phi = s h + K T`` (``s`` a linear section, ``K`` a basis of
    ``Ker p``).  Because ``Ker p`` is central, the bracket condition is linear
    in ``T``, so the whole problem is one affine linear system.
    """
    if h.target.dim != p.target.dim:
        raise ValueError("h and p must share a target")
    if not central_witness(p):
        raise ValueError("p is not a central extension")
    S, E = h.source, p.source
    X0 = linear_section(p) @ h.matrix
    Ksub = p.kernel()
    kd, ud = Ksub.rank, S.dim
    K = Ksub.inclusion() if kd else Matrix.zeros(E.dim, 0)
    blocks, rhs = [], []
    # A-linearity: X (a u) = a X(u)
    for l in range(S.base.dim):
        blk = _coeff_block(K, S.a_ops[l], kd, ud) - _coeff_block(E.a_ops[l] @ K, Matrix.identity(ud), kd, ud)
        blocks.append(blk)
        rhs.extend((E.a_ops[l] @ X0 - X0 @ S.a_ops[l]).flat())
    # bracket: K T [u_i, u_j] = [X0 u_i, X0 u_j] - X0 [u_i, u_j]
    pairs = [(i, j) for i in range(ud) for j in range(i + 1, ud)]
    if pairs:
        B = Matrix.from_columns([S.bracket[i][j] for i, j in pairs], ud)
        blocks.append(_coeff_block(K, B, kd, ud))
        res = Matrix.from_columns(
            [[x - y for x, y in zip(E.br(X0.column(i), X0.column(j)), X0.apply(S.bracket[i][j]))]
             for i, j in pairs], E.dim)
        rhs.extend(res.flat())
    # anchor: alpha_E(X u) = alpha_S(u)
    blocks.append(_coeff_block(E.anchor_flat @ K, Matrix.identity(ud), kd, ud))
    rhs.extend((S.anchor_flat - E.anchor_flat @ X0).flat())
    if kd * ud == 0:
        ok = not any(rhs)
        return LiftSolution(LRMorphism(S, E, X0) if ok else None, 0)
    M = vstack(*blocks)
    sol = solve_vec(M, rhs)
    free = kd * ud - M.rank()
    if sol is None:
        return LiftSolution(None, free)
    T = Matrix.unflatten(sol, kd, ud)
    phi = LRMorphism(S, E, X0 + K @ T)
    require_valid(validate_morphism(phi), "solved lift is not a morphism")
    return LiftSolution(phi, free)


def splittings(p: LRMorphism) -> LiftSolution:
    """Splitting morphisms ``s`` of a central extension (``p o s = 1``)."""
    return solve_lifts(LRMorphism.identity(p.target), p)


# ---------------------------------------------------------------- characterization battery


def inner_automorphisms(L: LieRinehartAlgebra, limit: int = 4) -> list:
    """``exp(ad x)`` for basis vectors ``x`` with zero anchor and nilpotent ``ad x``."""
    out = []
    for i in range(L.dim):
        if not L.anchor[i].is_zero():
            continue
        N = L.ad[i]
        if N.is_zero() or not is_nilpotent(N):
            continue
        out.append(LRMorphism(L, L, exp_nilpotent(N)))
        if len(out) >= limit:
            break
    return out


def central_extension_battery(L: LieRinehartAlgebra, automorphisms=(), seed: int = 0) -> list:
    """Named central extensions ``p: E -> L`` used to exercise the universal property.

    Products with free modules, a twisted (transported) product, and
    pullbacks of those along automorphisms of L.
    """
    rng = random.Random(seed)
    A = L.base
    out = []
    E1, p1 = trivial_central_product(L, free_module(A, 1), name=f"{L.name}xA")
    out.append(("product_A", p1))
    E2, p2 = trivial_central_product(L, free_module(A, 2), name=f"{L.name}xA2")
    out.append(("product_A2", p2))
    n, k = L.dim, E1.dim - L.dim
    lam = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
    T = Matrix.from_rows([[1 if r == c else 0 for c in range(n)] + [0] * k for r in range(n)]
                         + [lam[r] + [1 if r == c else 0 for c in range(k)] for r in range(k)])
    Et = transport(E1, T, name=f"{L.name}xA~")
    pt = LRMorphism(Et, L, p1.matrix @ T.inverse())
    out.append(("twisted_product", pt))
    autos = list(automorphisms) + inner_automorphisms(L)
    for idx, h in enumerate(autos):
        for tag, c in (("product_A", p1), ("twisted", pt)):
            _, pL, _ = pullback_extension(c, h)
            out.append((f"pullback_{tag}_aut{idx}", pL.p))
    for name, p in out:
        require_valid(validate_lr(p.source), f"battery extension {name}")
        require_valid(validate_morphism(p), f"battery projection {name}")
    return out


@dataclass
class ExtensionCheck:
    name: str
    central: bool
    lift_unique: bool
    lift_matches_formula: bool
    uce_pullback_splits_uniquely: bool
    sum_identity: bool
    center_identity: bool

    @property
    def ok(self) -> bool:
        return all((self.central, self.lift_unique, self.lift_matches_formula,
                    self.uce_pullback_splits_uniquely, self.sum_identity, self.center_identity))


@dataclass
class CharacterizationReport:
    algebra: str
    uce_dim: int
    kernel_dim: int
    uce_perfect: bool
    kernel_central: bool
    kernel_is_center: bool | None
    quotient_by_center_centreless: bool | None
    extensions: list

    @property
    def ok(self) -> bool:
        flags = [self.uce_perfect, self.kernel_central] + [e.ok for e in self.extensions]
        flags += [x for x in (self.kernel_is_center, self.quotient_by_center_centreless) if x is not None]
        return all(flags)


def extension_identities(p: LRMorphism) -> tuple:
    """``E = {E,E} + Ker p`` and ``Z_A(E) = p^{-1}(Z_A(L))`` for a central ``p``."""
    E, L = p.source, p.target
    K = p.kernel()
    sum_ok = (commutator(E) + K).is_full()
    ZL = center(L)
    center_ok = center(E) == preimage(p.matrix, ZL)
    return sum_ok, center_ok


def verify_characterization(L: LieRinehartAlgebra, automorphisms=(), seed: int = 0) -> CharacterizationReport:
    """Exercise the universal property of ``uce_A(L)`` on a battery of central extensions."""
    if not is_perfect(L):
        raise ValueError(f"{L.name} is not perfect")
    U = build_uce(L)
    u = U.uce_morphism
    Ker = U.kernel
    ZU = center(U.algebra)
    checks = []
    for name, p in central_extension_battery(L, automorphisms, seed):
        central = bool(central_witness(p))
        sol = solve_lifts(u, p)
        formula = universal_lift(LRMorphism.identity(L), p, U)
        matches = sol.exists and sol.particular.matrix == formula.matrix
        _, pU, _ = pullback_extension(p, u)
        splits = splittings(pU.p).unique
        s_ok, c_ok = extension_identities(p)
        checks.append(ExtensionCheck(name, central, sol.unique, matches, splits, s_ok, c_ok))
    centreless = center(L).rank == 0
    kernel_is_center = (ZU == Ker) if centreless else None
    ZL = center(L)
    quo_ok = None
    if ZL.rank:
        Lq, _ = quotient_algebra(L, ZL)
        if is_perfect(Lq):
            quo_ok = center(Lq).rank == 0
    return CharacterizationReport(
        L.name, U.dim, Ker.rank, is_perfect(U.algebra), Ker <= ZU, kernel_is_center, quo_ok, checks)


def image_is_commutator(U: UceAlgebra) -> bool:
    return U.uce_morphism.image() == commutator(U.source)


__all__ = [
    "RelationSpan", "UceAlgebra", "WellDefinednessError", "relation_span", "build_uce",
    "uce_on_morphism", "is_central", "is_perfect", "linear_section", "universal_lift",
    "LiftSolution", "solve_lifts", "splittings", "inner_automorphisms",
    "central_extension_battery", "verify_characterization", "extension_identities",
    "image_is_commutator", "CharacterizationReport", "ExtensionCheck",
]
