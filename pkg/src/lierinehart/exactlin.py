"""Exact rational linear algebra.

Everything downstream (structure constants, relation spans, quotient
presentations, cochain spaces) reduces to the handful of primitives here:
dense ``Matrix`` objects over ``Fraction``, canonical ``Subspace`` objects
kept in reduced row-echelon form, and ``QuotientPresentation``.

Vectors are plain tuples of ``Fraction``.  Matrices act on column vectors,
so a linear map ``V -> W`` is stored with shape ``dim W x dim V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to ``Fraction``.

    Floats are rejected: nothing in this package is allowed to be inexact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def json_scalar(x):
    """An int when integral, else a ``"p/q"`` string."""
    x = scalar(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- vectors


def vec(entries: Iterable) -> Vec:
    return tuple(scalar(e) for e in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vec) -> Vec:
    if c == 0:
        return (ZERO,) * len(v)
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Vec], n: int) -> Vec:
    """Sum of ``coeffs[i] * vectors[i]``; ``n`` is the ambient dimension."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] += c * x
    return tuple(out)


def is_zero(v: Vec) -> bool:
    return not any(v)


def _sparse(v: Sequence) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def _dense(d: dict, n: int) -> Vec:
    out = [ZERO] * n
    for i, x in d.items():
        out[i] = x
    return tuple(out)


# ---------------------------------------------------------------- matrices


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entry grid does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [vec(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [vec(c) for c in columns]
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vec(n, i) for i in range(n)))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, v: Sequence) -> Vec:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self.entries)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = []
            b = other.entries
            for r in self.entries:
                acc = [ZERO] * other.cols
                for k, x in enumerate(r):
                    if x:
                        for j, y in enumerate(b[k]):
                            if y:
                                acc[j] += x * y
                out.append(tuple(acc))
            return Matrix(self.rows, other.cols, tuple(out))
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, tuple(vscale(c, r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.entries)

    def flat(self) -> Vec:
        return tuple(x for r in self.entries for x in r)

    @classmethod
    def unflatten(cls, v: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(tuple(v[i * cols:(i + 1) * cols]) for i in range(rows)))

    def rank(self) -> int:
        return len(rref(self)[1])

    def kernel(self) -> "Subspace":
        return kernel(self)

    def image(self) -> "Subspace":
        return image(self)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        x = solve(self, Matrix.identity(self.rows))
        if x is None or self.rank() != self.rows:
            raise ValueError("matrix is singular")
        return x

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def tolist(self) -> list:
        return [list(r) for r in self.entries]


def block_diag(*blocks: Matrix) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = []
    c0 = 0
    for b in blocks:
        for r in b.entries:
            out.append((ZERO,) * c0 + r + (ZERO,) * (cols - c0 - b.cols))
        c0 += b.cols
    return Matrix(rows, cols, tuple(out))


def hstack(*blocks: Matrix) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("row counts differ")
    return Matrix(rows, sum(b.cols for b in blocks),
                  tuple(sum((b.entries[i] for b in blocks), ()) for i in range(rows)))


def vstack(*blocks: Matrix) -> Matrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("column counts differ")
    return Matrix(sum(b.rows for b in blocks), cols, sum((b.entries for b in blocks), ()))


# ---------------------------------------------------------------- echelon core


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are sparse dicts with a leading 1 at their pivot and zeros at every
    other pivot column, so reducing a vector is a single pass over its
    support.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce_sparse(self, v: dict) -> dict:
        v = dict(v)
        rows = self.rows
        for p in [c for c in v if c in rows]:
            coef = v[p]
            for c, x in rows[p].items():
                y = v.get(c, ZERO) - coef * x
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
        return v

    def add_sparse(self, v: dict) -> bool:
        w = self.reduce_sparse(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        if inv != 1:
            w = {c: x * inv for c, x in w.items()}
        for row in self.rows.values():
            coef = row.get(p)
            if coef:
                for c, x in w.items():
                    y = row.get(c, ZERO) - coef * x
                    if y:
                        row[c] = y
                    else:
                        del row[c]
        self.rows[p] = w
        return True

    def add(self, v: Sequence) -> bool:
        return self.add_sparse(_sparse(v))

    def reduce(self, v: Sequence) -> Vec:
        return _dense(self.reduce_sparse(_sparse(v)), self.dim)

    def contains(self, v: Sequence) -> bool:
        return not self.reduce_sparse(_sparse(v))

    def to_subspace(self) -> "Subspace":
        pivots = tuple(sorted(self.rows))
        basis = tuple(_dense(self.rows[p], self.dim) for p in pivots)
        return Subspace(self.dim, basis, pivots)


def rref(m: Matrix) -> tuple:
    """Canonical reduced row-echelon form and pivot columns of ``m``.

    The result keeps the row count of ``m`` (zero rows at the bottom).
    """
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(r)
    sub = ech.to_subspace()
    rows = list(sub.basis) + [zero_vec(m.cols)] * (m.rows - sub.rank)
    return Matrix(m.rows, m.cols, tuple(rows)), sub.pivots


# ---------------------------------------------------------------- subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` stored by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple  # RREF rows
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient {ambient_dim}")
            ech.add(v)
        return ech.to_subspace()

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)),
                   tuple(range(ambient_dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    dim = rank

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for p, row in zip(self.pivots, self.basis):
            ech.rows[p] = _sparse(row)
        return ech

    def basis_matrix(self) -> Matrix:
        return Matrix(self.rank, self.ambient_dim, self.basis)

    def inclusion(self) -> Matrix:
        """Matrix whose columns are the basis vectors (``ambient x rank``)."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def reduce(self, v: Sequence) -> Vec:
        return self.echelon().reduce(v)

    def contains(self, v: Sequence) -> bool:
        return self.echelon().contains(v)

    def coords(self, v: Sequence) -> Vec:
        """Coordinates of a member ``v`` in the RREF basis (its pivot entries)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(scalar(v[p]) for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        ech = self.echelon()
        for v in other.basis:
            ech.add(v)
        return ech.to_subspace()

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        ech = other.echelon()
        return all(ech.contains(v) for v in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.rank == 0 or other.rank == 0:
            return Subspace.zero(self.ambient_dim)
        # x = sum c_i b_i = sum d_j b'_j  <=>  [B | -B'] (c, d) = 0
        stacked = hstack(self.inclusion(), other.inclusion().scale(-1))
        ker = kernel(stacked)
        inc = self.inclusion()
        return Subspace.span((inc.apply(k[:self.rank]) for k in ker.basis), self.ambient_dim)

    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")


def kernel(m: Matrix) -> Subspace:
    r, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(r.entries, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.rows)


def image_of(m: Matrix, sub: Subspace) -> Subspace:
    return Subspace.span((m.apply(b) for b in sub.basis), m.rows)


def preimage(m: Matrix, sub: Subspace) -> Subspace:
    """``{v : m v in sub}``."""
    q = quotient(m.rows, sub)
    return kernel(q.projection @ m)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution ``X`` of ``a X = b`` (free variables set to 0), or None."""
    if a.rows != b.rows:
        raise ValueError("row counts differ")
    aug = hstack(a, b)
    r, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    x = [[ZERO] * b.cols for _ in range(a.cols)]
    for row, p in zip(r.entries, pivots):
        x[p] = list(row[a.cols:])
    return Matrix(a.cols, b.cols, tuple(tuple(rw) for rw in x))


def solve_vec(a: Matrix, b: Sequence) -> Vec | None:
    x = solve(a, Matrix.from_columns([b], a.rows))
    return None if x is None else x.column(0)


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class QuotientPresentation:
    """``Q^ambient_dim / relations`` with the canonical non-pivot complement.

    ``projection`` sends ambient coordinates to quotient coordinates and
    ``section`` sends quotient coordinate ``s`` to the ``s``-th non-pivot unit
    vector, so ``projection @ section`` is the identity.
    """

    ambient_dim: int
    relations: Subspace
    complement: tuple  # non-pivot columns, i.e. the section's image coordinates
    _echelon: Echelon = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.complement)

    @property
    def projection(self) -> Matrix:
        return Matrix.from_columns([self.project(unit_vec(self.ambient_dim, i))
                                    for i in range(self.ambient_dim)], self.dim)

    @property
    def section(self) -> Matrix:
        return Matrix.from_columns([self.lift(unit_vec(self.dim, s)) for s in range(self.dim)],
                                   self.ambient_dim)

    def project(self, v: Sequence) -> Vec:
        return self.project_sparse(_sparse(v))

    def project_sparse(self, v: dict) -> Vec:
        w = self._echelon.reduce_sparse(v)
        return tuple(w.get(c, ZERO) for c in self.complement)

    def lift(self, q: Sequence) -> Vec:
        out = [ZERO] * self.ambient_dim
        for c, x in zip(self.complement, q):
            out[c] = scalar(x)
        return tuple(out)

    def in_relations(self, v: Sequence) -> bool:
        return self._echelon.contains(v)

    def in_relations_sparse(self, v: dict) -> bool:
        return not self._echelon.reduce_sparse(v)


def quotient(ambient_dim: int, relations: Subspace) -> QuotientPresentation:
    if relations.ambient_dim != ambient_dim:
        raise ValueError("relations live in a different ambient space")
    pivset = set(relations.pivots)
    complement = tuple(c for c in range(ambient_dim) if c not in pivset)
    return QuotientPresentation(ambient_dim, relations, complement, relations.echelon())


# ---------------------------------------------------------------- closure


def close_under(seed: Subspace, operators: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing ``seed`` and stable under ``operators``."""
    n = seed.ambient_dim
    for op in operators:
        if op.shape != (n, n):
            raise ValueError("operators must be endomorphisms of the ambient space")
    ech = seed.echelon()
    queue = list(seed.basis)
    while queue:
        v = queue.pop()
        for op in operators:
            w = op.apply(v)
            if ech.add(w):
                queue.append(w)
    return ech.to_subspace()


def close_under_sparse(ech: Echelon, seeds: list, apply_ops) -> Echelon:
    """Closure driver for operators given as a sparse-vector callback.

    ``apply_ops(v)`` yields the images of the sparse vector ``v`` under every
    operator.  ``seeds`` must already be members of ``ech``.
    """
    queue = list(seeds)
    while queue:
        v = queue.pop()
        for w in apply_ops(v):
            r = ech.reduce_sparse(w)
            if r:
                ech.add_sparse(r)
                queue.append(r)
    return ech
