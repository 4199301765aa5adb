"""Run every construction over the builtin corpus and print one row per algebra.

Each row records validation, centre and commutator dimensions, the uce
(built with its well-definedness checks), Rinehart cohomology with trivial
coefficients, the complex identities, the Der_A(L, M) identity and the
bracket self-tensor (hat-tensor comparison for perfect algebras).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from lierinehart.algebra import center, commutator, is_perfect, trivial_left_module, trivial_right_module, validate_lr
from lierinehart.constructions import BUILTIN_NAMES, builtin
from lierinehart.homology import chain_boundary, coboundary, cohomology, der_module, homology, max_degree
from lierinehart.nabtensor import hat_tensor, self_actions, tensor_product
from lierinehart.uce import build_uce


def row(name: str) -> dict:
    t0 = time.perf_counter()
    L = builtin(name)
    M = trivial_left_module(L)
    top = max_degree()
    out = {"name": name, "dim": L.dim, "base_dim": L.base.dim, "valid": not validate_lr(L),
           "center": center(L).rank, "commutator": commutator(L).rank, "perfect": is_perfect(L)}
    U = build_uce(L)
    out["uce"] = {"dim": U.dim, "kernel": U.kernel.rank}
    out["H"] = [cohomology(L, M, n).dim for n in range(top + 1)]
    out["dd_zero"] = all((coboundary(L, M, n + 1) @ coboundary(L, M, n)).is_zero() for n in range(top))
    if L.has_zero_anchor:
        R = trivial_right_module(L)
        out["H_"] = [homology(L, R, n) for n in range(top + 1)]
        out["bb_zero"] = all((chain_boundary(L, R, n)[2] @ chain_boundary(L, R, n + 1)[2]).is_zero()
                             for n in range(1, top))
    out["der_identity"] = der_module(L, M).identity_holds
    T = tensor_product(self_actions(L))
    out["self_tensor"] = T.dim
    if out["perfect"]:
        H = hat_tensor(L)
        out["hat_iso"] = H.mutually_inverse and H.kernels_match
    out["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("names", nargs="*", default=list(BUILTIN_NAMES))
    args = ap.parse_args(argv)
    rows = [row(n) for n in args.names]
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        for r in rows:
            extras = " ".join(f"{k}={r[k]}" for k in ("H_", "bb_zero", "hat_iso") if k in r)
            print(f"{r['name']:<36} dim={r['dim']} A={r['base_dim']} valid={r['valid']} Z={r['center']} "
                  f"[L,L]={r['commutator']} uce={r['uce']['dim']}/{r['uce']['kernel']} H={r['H']} "
                  f"dd={r['dd_zero']} der={r['der_identity']} LxL={r['self_tensor']} {extras} "
                  f"({r['seconds']}s)")
    ok = all(r["valid"] and r["dd_zero"] and r.get("bb_zero", True) and r["der_identity"] and r.get("hat_iso", True)
             for r in rows)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
