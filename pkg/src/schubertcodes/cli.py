"""Command-line front end: ``ssc construct | verify | bounds | compare | enumerate | example``.

Exit status: 0 on success (or a valid code for ``verify``), 1 when
``verify`` finds the code invalid, 2 on usage, parameter or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from ._caps import CapExceeded
from .bounds import bounds_table, verify_intersecting
from .codes import SubspaceCode
from .constructions import norm_one_code, scattered_code
from .ferrers import METHODS, max_multilevel_bound_2k, multilevel_assemble, singleton_bound
from .fields import make_field
from .io import FormatError, read_code, read_qsystem, read_subspace, write_code
from .linalg import Subspace, enumerate_pivot_vectors, gaussian_binomial
from .schubert import (
    cell_in_omega_ul,
    cell_size,
    echelon_ferrers_of,
    omega_ul_condition,
    pivot_to_condition,
    standard_flag_space,
)


class UsageError(Exception):
    pass


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


# --- construct ----------------------------------------------------------------


def _build(args) -> SubspaceCode:
    if args.kind == "norm1":
        _need(args, "q", "k", "r")
        code, _ = norm_one_code(args.k, args.r, make_field(args.q, args.k))
        return code
    if args.kind == "scattered":
        if not args.system:
            raise UsageError("construct scattered needs --system FILE")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code, _ = scattered_code(read_qsystem(args.system))
        for w in caught:
            _warn(str(w.message))
        return code
    _need(args, "q", "k", "r", "u", "l", "t")
    return multilevel_assemble(args.k, args.r, args.u, args.l, args.t, args.q, method=args.method, seed=args.seed)


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.kind} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    code = _build(args)
    ell = args.l if args.l is not None else 1
    t = args.t if args.t is not None else 0
    if args.kind == "multilevel":
        ell, t = code.params["l"], code.params["t"]
    field = make_field(code.q, code.k)
    if args.out:
        write_code(args.out, code, field)
    report = verify_intersecting(code, code.reference, ell, t) if code.reference is not None else None
    payload = {"construction": code.name, "params": code.params, "out": args.out, "size": len(code)}
    lines = [f"{code.name} code in Gr_{code.q}({code.k}, {code.n})"]
    if report is not None:
        payload["report"] = report.to_dict()
        lines += report.lines()
    else:
        lines.append(f"size                  {len(code)}")
    if args.out:
        lines.append(f"written to            {args.out}")
    _emit(args, payload, lines)
    return 0


# --- verify ---------------------------------------------------------------------


def _reference(args, code: SubspaceCode) -> Subspace:
    if args.u_file and args.standard_u is not None:
        raise UsageError("give at most one of --u-file and --standard-u")
    if args.u_file:
        ref = read_subspace(args.u_file, code.q)
    elif args.standard_u is not None:
        if not 1 <= args.standard_u <= code.n:
            raise UsageError(f"--standard-u must lie in [1, {code.n}]")
        ref = standard_flag_space(args.standard_u, code.n, code.q)
    elif code.reference is not None:
        ref = code.reference
    else:
        raise UsageError("the file carries no reference subspace; pass --u-file or --standard-u")
    if ref.n != code.n:
        raise UsageError(f"ambient mismatch: code in F_q^{code.n}, U in F_q^{ref.n}")
    return ref


def cmd_verify(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code, _ = read_code(args.file)
    for w in caught:
        _warn(str(w.message))
    report = verify_intersecting(code, _reference(args, code), args.l, args.t)
    _emit(args, report.to_dict(), report.lines())
    return 0 if report.valid else 1


# --- bounds ---------------------------------------------------------------------


def _check_ranges(q: int, k: int, r: int, u: int, ell: int, t: int) -> None:
    if k < 2 or r < 2:
        raise UsageError("need k, r >= 2")
    if not 1 <= u <= r * k // 2:
        raise UsageError(f"need 1 <= u <= rk/2 = {r * k // 2}")
    if not 1 <= ell <= min(k, u):
        raise UsageError(f"need 1 <= l <= min(k, u) = {min(k, u)}")
    if not 0 <= t <= k - 1:
        raise UsageError(f"need 0 <= t <= k - 1 = {k - 1}")
    make_field(q, 1)  # rejects non-prime q


def cmd_bounds(args) -> int:
    _check_ranges(args.q, args.k, args.r, args.u, args.l, args.t)
    rows = bounds_table(args.q, args.k, args.r, args.u, args.l, args.t)
    lines = [f"bounds for m_{args.q}(k={args.k}, r={args.r}, u={args.u}, l={args.l}, t={args.t})"]
    for row in rows:
        val = "n/a" if row.value is None else str(row.value)
        if row.exponent is not None:
            val += f" (= q^{row.exponent})"
        flag = "  [conjectural]" if row.conditional else ""
        note = f"  {row.note}" if row.note else ""
        lines.append(f"  {row.name:<26}{val}{flag}{note}")
    _emit(args, {"params": _params(args), "bounds": [r.to_dict() for r in rows]}, lines)
    return 0


def _params(args) -> dict:
    return {k: getattr(args, k) for k in ("q", "k", "r", "u", "l", "t") if getattr(args, k, None) is not None}


# --- compare --------------------------------------------------------------------


def cmd_compare(args) -> int:
    q, k, r = args.q, args.k, args.r
    u = k
    _check_ranges(q, k, r, u, 1, 0)
    norm1, ref = norm_one_code(k, r, make_field(q, k))
    multi = multilevel_assemble(k, r, u, 1, 0, q, method=args.method, seed=args.seed)
    rep1 = verify_intersecting(norm1, ref, 1, 0)
    rep2 = verify_intersecting(multi, multi.reference, 1, 0)
    cell_bound, _ = max_multilevel_bound_2k(k, r, u, q)
    if r < u:
        strict = rep1.valid and rep2.valid and len(norm1) > cell_bound >= len(multi)
        verdict = "strict: norm-1 code beats every multilevel code" if strict else "NOT strict"
    else:
        strict = None
        verdict = "r >= u: no strictness claim"
    payload = {
        "params": {"q": q, "k": k, "r": r, "u": u},
        "norm1": {"size": len(norm1), "valid": rep1.valid, "minDistance": rep1.min_distance},
        "multilevel": {"size": len(multi), "valid": rep2.valid, "minDistance": rep2.min_distance},
        "multilevelCellBound": cell_bound,
        "strict": strict,
    }
    lines = [
        f"q={q} k={k} r={r} u={u}",
        f"  {'construction':<14}{'size':>6}{'valid':>8}{'dist':>6}",
        f"  {'norm1':<14}{len(norm1):>6}{'yes' if rep1.valid else 'NO':>8}{rep1.min_distance:>6}",
        f"  {'multilevel':<14}{len(multi):>6}{'yes' if rep2.valid else 'NO':>8}{rep2.min_distance:>6}",
        f"  multilevel cell bound {cell_bound}",
        f"  verdict: {verdict}",
    ]
    _emit(args, payload, lines)
    return 0 if strict is not False else 1


# --- enumerate ------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    q, k, r, u, ell, t = args.q, args.k, args.r, args.u, args.l, args.t
    _check_ranges(q, k, r, u, ell, t)
    n = r * k
    cells = []
    for p in enumerate_pivot_vectors(k, n):
        if not cell_in_omega_ul(p, n, u, ell):
            continue
        diag = echelon_ferrers_of(p, n)
        cells.append(
            {
                "pivots": list(p),
                "condition": list(pivot_to_condition(p, n)),
                "rowDots": list(diag.row_dots),
                "cellSize": cell_size(p, n, q),
                "exponent": singleton_bound(diag, k - t) if diag.n_dots else 0,
            }
        )
    cond = list(omega_ul_condition(u, ell, k, n))
    total = sum(c["cellSize"] for c in cells)
    lines = [
        f"Omega_(U,{ell}) in Gr_{q}({k},{n}), U = last {u} coordinates, condition {cond}",
        f"{len(cells)} cells, {total} subspaces (Gr has {gaussian_binomial(n, k, q)})",
        f"  {'pivots':<18}{'condition':<18}{'row dots':<18}{'size':>8}{'exp':>5}",
    ]
    for c in cells:
        lines.append(
            f"  {str(c['pivots']):<18}{str(c['condition']):<18}{str(c['rowDots']):<18}{c['cellSize']:>8}{c['exponent']:>5}"
        )
    _emit(args, {"condition": cond, "cells": cells, "totalSubspaces": total}, lines)
    return 0


# --- example --------------------------------------------------------------------


def cmd_example(args) -> int:
    q, k, r = 2, 3, 2
    field = make_field(q, k)
    code, ref = norm_one_code(k, r, field)
    report = verify_intersecting(code, ref, 1, 0)
    multi = multilevel_assemble(k, r, k, 1, 0, q)
    mrep = verify_intersecting(multi, multi.reference, 1, 0)
    if args.out:
        write_code(args.out, code, field)
    lines = [
        f"F_8 = F_2[x]/({_poly(field.modulus)}), U = phi({{(s, s^2) : s in F_8}}), u = 3",
        f"norm-1 elements a: {[int(w.split('=')[1]) for w in code.labels]}",
        *report.lines(),
        f"multilevel at the same parameters: {len(multi)} codewords, valid {'yes' if mrep.valid else 'NO'}",
    ]
    if args.out:
        lines.append(f"written to            {args.out}")
    payload = {"norm1": report.to_dict(), "multilevel": mrep.to_dict(), "out": args.out}
    _emit(args, payload, lines)
    return 0 if report.valid and mrep.valid else 1


def _poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms)


# --- parser ---------------------------------------------------------------------


def _add_params(p: argparse.ArgumentParser, names: str, required: bool = True, defaults: dict | None = None) -> None:
    defaults = defaults or {}
    for name in names.split():
        if name in defaults:
            p.add_argument(f"--{name}", type=int, default=defaults[name])
        else:
            p.add_argument(f"--{name}", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ssc", description="Subspace codes in Schubert varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write it to a file")
    p.add_argument("kind", choices=["norm1", "scattered", "multilevel"])
    _add_params(p, "q k r u l t", required=False)
    p.add_argument("--system", help="q-system JSON file (scattered)")
    p.add_argument("--out", help="output code file")
    p.add_argument("--method", choices=METHODS, default="auto", help="Ferrers code method (multilevel)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the (l, t)-intersecting property of a code file")
    p.add_argument("file")
    p.add_argument("--u-file", help="subspace file for U")
    p.add_argument("--standard-u", type=int, help="use U = span of the last u coordinates")
    _add_params(p, "l t", defaults={"l": 1, "t": 0})
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print the bounds that apply at given parameters")
    _add_params(p, "q k r u", required=True)
    _add_params(p, "l t", defaults={"l": 1, "t": 0})
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare", help="norm-1 versus multilevel at u = k")
    _add_params(p, "q k r", required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("enumerate", help="list the Schubert cells of Omega_(U,l)")
    _add_params(p, "q k r u", required=True)
    _add_params(p, "l t", defaults={"l": 1, "t": 0})
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("example", help="the q=2, k=u=3, r=2 demo")
    p.add_argument("--out", help="write the norm-1 code here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, FormatError, CapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
