"""JSON file format for base algebras, Lie-Rinehart algebras, modules, actions and morphisms.

Scalars are written as JSON integers or ``"p/q"`` strings; floats are
rejected.  A document may carry these top-level sections::

    {"base": {...}, "algebra": {...},
     "modules": {name: {...}}, "actions": {...}, "morphisms": {name: {...}}}

Morphisms and actions name their algebras by reference: a path relative to
the referencing file, ``"builtin:NAME"``, or ``"self"`` for the algebra in
the same document.  Every parsed object passes its validator before it is
returned; failures raise ``ParseError`` (malformed input) or ``AxiomError``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import (
    CommAlgebra, LeftLRModule, LieRinehartAlgebra, LRMorphism, RightLRModule, require_valid,
    validate_comm_algebra, validate_left_module, validate_lr, validate_morphism,
    validate_right_module,
)
from .constructions import builtin
from .exactlin import Matrix, json_scalar
from .nabtensor import ActionPair, self_actions

FORMAT = "lierinehart/1"


class ParseError(ValueError):
    """Malformed document; ``where`` is a JSON-pointer-like location."""

    def __init__(self, where: str, msg: str):
        self.where = where
        super().__init__(f"{where}: {msg}")


# ---------------------------------------------------------------- scalars


dump_scalar = json_scalar


def _scalar(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(where, f"malformed scalar {x!r}; use an integer or a 'p/q' string")
    try:
        return Fraction(x) if isinstance(x, int) else Fraction(x.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(where, f"malformed scalar {x!r}") from None


def _dump(obj):
    if isinstance(obj, Matrix):
        return [[dump_scalar(c) for c in r] for r in obj.entries]
    if isinstance(obj, (tuple, list)):
        return [_dump(v) for v in obj]
    return dump_scalar(obj)


def _tensor(data, shape: tuple, where: str) -> tuple:
    """Nested list of exact scalars with the given shape."""
    if not shape:
        return _scalar(data, where)
    if not isinstance(data, list):
        raise ParseError(where, f"expected a list of length {shape[0]}")
    if len(data) != shape[0]:
        raise ParseError(where, f"dimension mismatch: expected length {shape[0]}, got {len(data)}")
    return tuple(_tensor(v, shape[1:], f"{where}/{i}") for i, v in enumerate(data))


def _field(d: dict, key: str, where: str):
    if not isinstance(d, dict):
        raise ParseError(where, "expected an object")
    if key not in d:
        raise ParseError(where, f"missing field {key!r}")
    return d[key]


def _dim(d: dict, where: str) -> int:
    n = _field(d, "dim", where)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError(f"{where}/dim", "dim must be a non-negative integer")
    return n


# ---------------------------------------------------------------- dump


def dump_base(A: CommAlgebra) -> dict:
    out = {"name": A.name, "dim": A.dim, "unit": _dump(A.unit), "mult": _dump(A.mult)}
    if A.augmentation is not None:
        out["augmentation"] = _dump(A.augmentation)
    return out


def dump_algebra(L: LieRinehartAlgebra) -> dict:
    """Document with ``base`` and ``algebra`` sections."""
    alg = {"name": L.name, "dim": L.dim, "a_action": _dump(L.a_action), "bracket": _dump(L.bracket),
           "anchor": [_dump(m) for m in L.anchor]}
    if L.labels:
        alg["labels"] = list(L.labels)
    return {"format": FORMAT, "base": dump_base(L.base), "algebra": alg}


def dump_module(M) -> dict:
    if isinstance(M, LeftLRModule):
        return {"side": "left", "name": M.name, "dim": M.dim, "a_action": _dump(M.a_action),
                "action": _dump(M.l_action)}
    return {"side": "right", "name": M.name, "dim": M.dim, "a_action": _dump(M.a_action),
            "action": _dump(M.r_action)}


def dump_morphism(f: LRMorphism, source: str, target: str) -> dict:
    return {"source": source, "target": target, "matrix": _dump(f.matrix)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True)


def write(doc: dict, path) -> None:
    Path(path).write_text(dumps(doc) + "\n")


# ---------------------------------------------------------------- parse


def parse_base(d: dict, where: str = "/base") -> CommAlgebra:
    n = _dim(d, where)
    unit = _tensor(_field(d, "unit", where), (n,), f"{where}/unit")
    mult = _tensor(_field(d, "mult", where), (n, n, n), f"{where}/mult")
    aug = d.get("augmentation")
    aug = None if aug is None else _tensor(aug, (n,), f"{where}/augmentation")
    A = CommAlgebra(n, unit, mult, aug, str(d.get("name", "")))
    require_valid(validate_comm_algebra(A), f"{where}: base algebra")
    return A


def parse_algebra(doc: dict, where: str = "") -> LieRinehartAlgebra:
    A = parse_base(_field(doc, "base", where or "/"), f"{where}/base")
    d = _field(doc, "algebra", where or "/")
    w = f"{where}/algebra"
    n = _dim(d, w)
    a_action = _tensor(_field(d, "a_action", w), (A.dim, n, n), f"{w}/a_action")
    bracket = _tensor(_field(d, "bracket", w), (n, n, n), f"{w}/bracket")
    anchor = _tensor(_field(d, "anchor", w), (n, A.dim, A.dim), f"{w}/anchor")
    labels = tuple(d.get("labels", ()))
    if labels and len(labels) != n:
        raise ParseError(f"{w}/labels", f"dimension mismatch: expected {n} labels")
    L = LieRinehartAlgebra(A, n, a_action, bracket, tuple(Matrix(A.dim, A.dim, m) for m in anchor),
                           str(d.get("name", "")), labels)
    require_valid(validate_lr(L), f"{w}: algebra")
    return L


def parse_module(L: LieRinehartAlgebra, d: dict, where: str):
    side = _field(d, "side", where)
    n = _dim(d, where)
    a_action = _tensor(_field(d, "a_action", where), (L.base.dim, n, n), f"{where}/a_action")
    name = str(d.get("name", ""))
    if side == "left":
        act = _tensor(_field(d, "action", where), (L.dim, n, n), f"{where}/action")
        M = LeftLRModule(L, n, a_action, act, name)
        require_valid(validate_left_module(M), f"{where}: left module")
    elif side == "right":
        act = _tensor(_field(d, "action", where), (n, L.dim, n), f"{where}/action")
        M = RightLRModule(L, n, a_action, act, name)
        require_valid(validate_right_module(M), f"{where}: right module")
    else:
        raise ParseError(f"{where}/side", "side must be 'left' or 'right'")
    return M


def read_json(path) -> dict:
    p = Path(path)
    try:
        doc = json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"{p}:{e.lineno}:{e.colno}", e.msg) from None
    if not isinstance(doc, dict):
        raise ParseError(str(p), "top level must be an object")
    return doc


def resolve(ref: str, relative_to: Path | None, self_doc: dict | None = None) -> LieRinehartAlgebra:
    """Algebra named by ``"builtin:NAME"``, ``"self"`` or a path."""
    if ref.startswith("builtin:"):
        return builtin(ref.split(":", 1)[1])
    if ref == "self":
        if self_doc is None:
            raise ParseError("/", "'self' used in a document without an algebra")
        return parse_algebra(self_doc)
    p = Path(ref)
    if relative_to is not None and not p.is_absolute():
        p = relative_to / p
    return load_algebra(p)


def load_algebra(path) -> LieRinehartAlgebra:
    return parse_algebra(read_json(path))


def load_modules(path, L: LieRinehartAlgebra | None = None) -> dict:
    doc = read_json(path)
    L = L or parse_algebra(doc)
    mods = doc.get("modules", {})
    return {k: parse_module(L, v, f"/modules/{k}") for k, v in sorted(mods.items())}


def load_morphisms(path) -> dict:
    """All morphisms in a document, validated."""
    path = Path(path)
    doc = read_json(path)
    out = {}
    for name, d in sorted(_field(doc, "morphisms", "/").items()):
        w = f"/morphisms/{name}"
        S = resolve(_field(d, "source", w), path.parent, doc)
        T = resolve(_field(d, "target", w), path.parent, doc)
        m = _tensor(_field(d, "matrix", w), (T.dim, S.dim), f"{w}/matrix")
        f = LRMorphism(S, T, Matrix(T.dim, S.dim, m))
        require_valid(validate_morphism(f), f"{w}: morphism")
        out[name] = f
    return out


def load_actions(path, L: LieRinehartAlgebra, M: LieRinehartAlgebra):
    """An ``ActionPair`` from ``{"actions": {"l_on_m": ..., "m_on_l": ...}}`` or ``{"actions": "bracket"}``."""
    d = _field(read_json(path), "actions", "/")
    if d == "bracket":
        if L != M:
            raise ParseError("/actions", "'bracket' needs the same algebra on both sides")
        return self_actions(L)
    lm = _tensor(_field(d, "l_on_m", "/actions"), (L.dim, M.dim, M.dim), "/actions/l_on_m")
    ml = _tensor(_field(d, "m_on_l", "/actions"), (M.dim, L.dim, L.dim), "/actions/m_on_l")
    return ActionPair(L, M, lm, ml)


def dump_actions(pair) -> dict:
    return {"format": FORMAT, "actions": {"l_on_m": _dump(pair.l_on_m), "m_on_l": _dump(pair.m_on_l)}}
