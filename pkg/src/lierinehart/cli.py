"""Command-line entry point.

Exit codes: 0 success, 1 validation failure (bad file contents, axiom
violations, failed preconditions), 2 usage error (bad arguments, missing
files, unknown builtins).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    AxiomError, LRMorphism, center, commutator, is_perfect, trivial_left_module,
    trivial_right_module, validate_lr,
)
from .constructions import (
    BUILTIN_NAMES, base_algebra, builtin, central_witness, chevalley_involution, lie_algebra, product,
    pullback_extension,
)
from .exactlin import Matrix, json_scalar
from .fileformat import ParseError, load_actions, load_algebra, load_modules, load_morphisms
from .homology import cohomology, homology, rinehart_vs_ce
from .lifting import (
    lift_automorphism, lift_derivation, make_covering, rinehart_derivations, sl2_automorphism_sample,
    split_uce_check,
)
from .nabtensor import factor_pairing, hat_tensor, self_actions, tensor_product
from .uce import WellDefinednessError, build_uce, image_is_commutator


class UsageError(Exception):
    pass


def _vec(v) -> list:
    return [json_scalar(x) for x in v]


# ---------------------------------------------------------------- inputs


def _algebra_from(path, name):
    if name:
        try:
            return builtin(name)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if not path:
        raise UsageError("give an algebra file or --builtin NAME")
    if not Path(path).exists():
        raise UsageError(f"no such file: {path}")
    return load_algebra(path)


def _algebra(args):
    return _algebra_from(getattr(args, "file", None), getattr(args, "builtin", None))


def _require_file(path):
    if not Path(path).exists():
        raise UsageError(f"no such file: {path}")
    return path


def _left_module(args, L):
    if args.module:
        mods = load_modules(_require_file(args.file), L) if args.file else {}
        if args.module not in mods:
            raise UsageError(f"module {args.module!r} not found in {args.file}")
        return mods[args.module]
    return trivial_left_module(L, args.trivial_module)


# ---------------------------------------------------------------- commands


def cmd_check(args):
    try:
        L = _algebra(args)
    except AxiomError as e:
        return 1, {"valid": False, "violations": [v.to_dict() for v in e.report]}
    rep = validate_lr(L)
    return (1 if rep else 0), {"valid": not rep, "dim": L.dim, "base_dim": L.base.dim,
                               "violations": [v.to_dict() for v in rep]}


def cmd_center(args):
    L = _algebra(args)
    Z = center(L)
    return 0, {"dim": Z.rank, "basis": [_vec(b) for b in Z.basis]}


def cmd_commutator(args):
    L = _algebra(args)
    D = commutator(L)
    return 0, {"dim": D.rank, "codim": L.dim - D.rank, "perfect": D.rank == L.dim}


def cmd_uce(args):
    L = _algebra(args)
    U = build_uce(L)
    return 0, {"quotient_dim": U.dim, "kernel_dim": U.kernel.rank, "perfect": is_perfect(L),
               "central": bool(central_witness(U.uce_morphism)) if U.uce_morphism.is_surjective() else False,
               "image_is_commutator": image_is_commutator(U)}


def cmd_cohomology(args):
    L = _algebra(args)
    M = _left_module(args, L)
    dims = [cohomology(L, M, n).dim for n in range(args.degree + 1)]
    return 0, {"dim": dims[-1], "degree": args.degree, "dims": dims}


def cmd_homology(args):
    L = _algebra(args)
    if not L.has_zero_anchor:
        raise ValueError("trivial right modules need a zero anchor")
    M = trivial_right_module(L, args.trivial_module)
    dims = [homology(L, M, n) for n in range(args.degree + 1)]
    return 0, {"dim": dims[-1], "degree": args.degree, "dims": dims}


def cmd_compare_ce(args):
    try:
        g, A = lie_algebra(args.lie), base_algebra(args.base)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out = rinehart_vs_ce(g, A, degrees=tuple(range(args.degree + 1)))
    return (0 if out["equal"] else 1), out


def cmd_tensor(args):
    L = _algebra_from(args.file, args.builtin)
    M = _algebra_from(args.other, args.builtin_other) if (args.other or args.builtin_other) else L
    if args.hat:
        H = hat_tensor(L)
        T = H.tensor
        uce_iso = H.mutually_inverse and H.kernels_match
    else:
        pair = load_actions(_require_file(args.actions), L, M) if args.actions else self_actions(L)
        T = tensor_product(pair)
        uce_iso = False
        if L == M and pair == self_actions(L) and is_perfect(L):
            U = build_uce(L)
            f = tuple(tuple(U.element(L.base.unit, L.basis(j), L.basis(k)) for k in range(L.dim))
                      for j in range(L.dim))
            try:
                phi = factor_pairing(T, U.algebra, f).morphism
                uce_iso = phi.matrix.rows == phi.matrix.cols and phi.matrix.is_invertible()
            except (WellDefinednessError, AxiomError):
                uce_iso = False
    try:
        central = bool(central_witness(T.mu))
    except ValueError:
        central = False
    return 0, {"dim": T.dim, "mu_rank": T.mu.matrix.rank(), "nu_rank": T.nu.matrix.rank(),
               "central": central, "uce_iso": uce_iso}


def _covering(args):
    """The covering from a morphism file (its ``covering`` entry), else the uce map of ``--builtin``."""
    if args.covering:
        mors = load_morphisms(_require_file(args.covering))
        if "covering" not in mors:
            raise UsageError("morphism file must define 'covering'")
        f = mors["covering"]
        if args.builtin and f.target != _algebra_from(None, args.builtin):
            raise UsageError("covering target differs from --builtin")
        return make_covering(f)
    if not args.builtin:
        raise UsageError("give a covering file or --builtin NAME")
    return make_covering(build_uce(_algebra_from(None, args.builtin)).uce_morphism)


def cmd_lift_aut(args):
    cov = _covering(args)
    L = cov.f.target
    auts = []
    if args.aut:
        auts += [(k, m) for k, m in load_morphisms(_require_file(args.aut)).items()]
    if args.chevalley:
        auts.append(("chevalley", LRMorphism(L, L, chevalley_involution())))
    if args.sample:
        auts += [(f"sample{i}", LRMorphism(L, L, m)) for i, m in enumerate(sl2_automorphism_sample(args.sample))]
    if not auts:
        raise UsageError("give --aut FILE, --chevalley or --sample N")
    results = []
    for name, h in auts:
        d = lift_automorphism(cov, h).to_dict()
        d["name"] = name
        results.append(d)
    return 0, {"covering_kernel_in_uce": cov.C.rank, "results": results}


def cmd_lift_der(args):
    cov = _covering(args)
    L = cov.f.target
    results = [lift_derivation(cov, D).to_dict() for D in rinehart_derivations(L)]
    return 0, {"covering_kernel_in_uce": cov.C.rank, "derivations": len(results),
               "lifted": sum(r["lifted"] for r in results), "results": results}


def cmd_pullback(args):
    mors = load_morphisms(_require_file(args.morphisms))
    if "c" not in mors or "f" not in mors:
        raise UsageError("morphism file must define 'c' (central extension) and 'f'")
    P, wit, _ = pullback_extension(mors["c"], mors["f"])
    return 0, {"dim": P.dim, "central": wit.is_central, "kernel_dim": wit.kernel.rank}


def cmd_split_uce(args):
    if args.morphisms:
        mors = load_morphisms(_require_file(args.morphisms))
        missing = {"f", "g", "s"} - set(mors)
        if missing:
            raise UsageError(f"morphism file lacks {sorted(missing)}")
        f, g, s = mors["f"], mors["g"], mors["s"]
    else:
        L = _algebra(args)
        P, p1, p2 = product(L, L)
        n = L.dim
        f = LRMorphism(L, P, Matrix.from_columns([P.basis(i) for i in range(n)], P.dim))
        s = LRMorphism(L, P, Matrix.from_columns([P.basis(n + i) for i in range(n)], P.dim))
        g = p2
    r = split_uce_check(f, g, s)
    return (0 if r.ok else 1), {"ok": r.ok, "sum_is_everything": r.sum_is_everything,
                                "phi_image_is_ideal": r.phi_image_is_ideal,
                                "phi_image_is_kernel_of_gamma": r.phi_image_is_kernel_of_gamma,
                                "kernel_decomposes": r.kernel_decomposes, "direct_product": r.direct_product,
                                "product_iso": r.product_iso, "dims": r.dims}


# ---------------------------------------------------------------- parser


def _add_source(p, file=True):
    if file:
        p.add_argument("file", nargs="?", help="algebra file")
    p.add_argument("--builtin", help=f"builtin algebra ({', '.join(BUILTIN_NAMES)})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lierinehart", description="Exact computations with Lie-Rinehart algebras.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    _add_source(add("check", cmd_check, "validate an algebra"))
    _add_source(add("center", cmd_center, "centre Z_A(L)"))
    _add_source(add("commutator", cmd_commutator, "commutator {L, L}"))
    _add_source(add("uce", cmd_uce, "universal central extension"))
    for name, fn in (("cohomology", cmd_cohomology), ("homology", cmd_homology)):
        p = add(name, fn, f"Rinehart {name}")
        _add_source(p)
        p.add_argument("--trivial-module", type=int, default=1, metavar="K", help="dimension of the trivial module")
        p.add_argument("--degree", type=int, required=True)
        if name == "cohomology":
            p.add_argument("--module", help="left module name from the algebra file")
    p = add("compare-ce", cmd_compare_ce, "Rinehart vs Chevalley-Eilenberg for A (x) g")
    p.add_argument("--lie", required=True, help="sl2, heisenberg or abelian(n)")
    p.add_argument("--base", default="rationals", help="rationals, dual_numbers or split2")
    p.add_argument("--degree", type=int, default=2, help="compare degrees 0..N")
    p = add("tensor", cmd_tensor, "non-abelian tensor product")
    _add_source(p)
    p.add_argument("other", nargs="?", help="second algebra file (defaults to the first)")
    p.add_argument("--builtin-other", help="second algebra as a builtin")
    p.add_argument("--actions", help="actions file (defaults to bracket self-actions)")
    p.add_argument("--hat", action="store_true", help="add the hat relation and compare with uce")
    for name, fn in (("lift-aut", cmd_lift_aut), ("lift-der", cmd_lift_der)):
        p = add(name, fn, "lift along a covering (default: the uce map of --builtin)")
        p.add_argument("covering", nargs="?", help="morphism file defining 'covering'")
        _add_source(p, file=False)
        if name == "lift-aut":
            p.add_argument("aut", nargs="?", help="morphism file of automorphisms of the covering target")
            p.add_argument("--chevalley", action="store_true", help="the Chevalley involution of sl2")
            p.add_argument("--sample", type=int, default=0, metavar="N", help="N sampled sl2 automorphisms")
    p = add("pullback", cmd_pullback, "pull back a central extension")
    p.add_argument("morphisms", help="morphism file defining 'c' and 'f'")
    p = add("split-uce", cmd_split_uce, "uce of a split exact sequence")
    _add_source(p)
    p.add_argument("--morphisms", help="morphism file defining 'f', 'g', 's'")
    return ap


def _human(report: dict) -> str:
    if report.get("valid") is True:
        return "valid"
    lines = []
    for k, v in report.items():
        lines.append(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, report = args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (ParseError, AxiomError, WellDefinednessError, ValueError) as e:
        report = {"error": type(e).__name__, "message": str(e)}
        if isinstance(e, AxiomError):
            report["violations"] = [v.to_dict() for v in e.report]
        if args.json:
            print(json.dumps(report, sort_keys=True))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1
    print(json.dumps(report, sort_keys=True) if args.json else _human(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
