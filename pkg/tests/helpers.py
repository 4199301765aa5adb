"""Shared test utilities: structure-constant mutation, sympy oracles, acceptance line recorder."""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

import sympy

from lierinehart.algebra import LieRinehartAlgebra
from lierinehart.exactlin import Matrix

# (criterion number, passed, detail) appended by the acceptance tests, printed by conftest
ACCEPTANCE: list = []

SLOTS = ("base.mult", "base.unit", "a_action", "bracket", "anchor")


def _bump(t, path, delta):
    if not path:
        return t + delta
    i = path[0]
    return tuple(_bump(v, path[1:], delta) if k == i else v for k, v in enumerate(t))


def mutate(L: LieRinehartAlgebra, rng: random.Random) -> tuple:
    """One structure constant changed by a nonzero integer; returns (algebra, description)."""
    A, n, d = L.base, L.dim, L.base.dim
    slot = rng.choice(SLOTS)
    delta = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    if slot == "base.mult":
        path = (rng.randrange(d), rng.randrange(d), rng.randrange(d))
        return replace(L, base=replace(A, mult=_bump(A.mult, path, delta))), (slot, path)
    if slot == "base.unit":
        path = (rng.randrange(d),)
        return replace(L, base=replace(A, unit=_bump(A.unit, path, delta))), (slot, path)
    if slot == "a_action":
        path = (rng.randrange(d), rng.randrange(n), rng.randrange(n))
        return replace(L, a_action=_bump(L.a_action, path, delta)), (slot, path)
    if slot == "bracket":
        path = (rng.randrange(n), rng.randrange(n), rng.randrange(n))
        return replace(L, bracket=_bump(L.bracket, path, delta)), (slot, path)
    j, r, c = rng.randrange(n), rng.randrange(d), rng.randrange(d)
    anchor = list(L.anchor)
    anchor[j] = Matrix(d, d, _bump(anchor[j].entries, (r, c), delta))
    return replace(L, anchor=tuple(anchor)), (slot, (j, r, c))


def sympy_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.entries]).rank()


def sympy_nullity(m: Matrix) -> int:
    return m.cols - sympy_rank(m)


def _sym(v):
    return sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in v])


def independent_lr_check(L: LieRinehartAlgebra, rng: random.Random, trials: int = 6) -> bool:
    """Re-derive every Lie-Rinehart axiom with sympy on random rational elements.

    Shares no code with the package validators: structure constants are
    turned into sympy matrices and each identity is evaluated on random
    combinations rather than basis instances.
    """
    A, n, d = L.base, L.dim, L.base.dim
    Amul = [[_sym(A.mult[i][j]) for j in range(d)] for i in range(d)]
    unit = _sym(A.unit)

    def amul(a, b):
        out = sympy.zeros(d, 1)
        for i in range(d):
            for j in range(d):
                out += a[i] * b[j] * Amul[i][j]
        return out

    act_t = [[_sym(L.a_action[i][j]) for j in range(n)] for i in range(d)]
    br_t = [[_sym(L.bracket[i][j]) for j in range(n)] for i in range(n)]
    anc = [sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.entries])
           for m in L.anchor]

    def act(a, x):
        out = sympy.zeros(n, 1)
        for i in range(d):
            for j in range(n):
                out += a[i] * x[j] * act_t[i][j]
        return out

    def br(x, y):
        out = sympy.zeros(n, 1)
        for i in range(n):
            for j in range(n):
                out += x[i] * y[j] * br_t[i][j]
        return out

    def alpha(x):
        out = sympy.zeros(d, d)
        for i in range(n):
            out += x[i] * anc[i]
        return out

    def rnd(k):
        return sympy.Matrix([sympy.Rational(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(k)])

    for _ in range(trials):
        a, b, c = rnd(d), rnd(d), rnd(d)
        x, y, z = rnd(n), rnd(n), rnd(n)
        checks = [
            amul(a, b) - amul(b, a),
            amul(amul(a, b), c) - amul(a, amul(b, c)),
            amul(unit, a) - a,
            act(amul(a, b), x) - act(a, act(b, x)),
            act(unit, x) - x,
            br(x, y) + br(y, x),
            br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)),
            alpha(x) * amul(a, b) - amul(alpha(x) * a, b) - amul(a, alpha(x) * b),
            alpha(br(x, y)) - (alpha(x) * alpha(y) - alpha(y) * alpha(x)),
            alpha(act(a, x)) * b - amul(a, alpha(x) * b),
            br(x, act(a, y)) - act(a, br(x, y)) - act(alpha(x) * a, y),
        ]
        if any(c != sympy.zeros(*c.shape) for c in checks):
            return False
    return True
