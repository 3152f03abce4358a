"""Command-line driver: constants, norms, transforms, and the verifiers.

Exit codes: 0 when every asserted bound passes, 1 on a verification failure
(the violating parameters are printed), 2 on bad arguments or malformed
input files.  Reports carry the seed and all effective parameters; with a
fixed seed the JSON output is reproducible byte for byte except for the
elapsed_ms fields.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import battery
from .constants import Minorant, SharpConstant, sharp_constant
from .gridlab import InequalityId, check_submean, verify_pointwise
from .hilbert import conjugate_map
from .maps import map_from_dict, map_to_dict
from .quadrature import bergman_norm, bergman_triple_norm, hardy_norm, mp_radius, triple_norm
from .reporting import GridSpec, VerificationReport
from .theorems import TheoremId, sharpness_probe, verify_theorem

__all__ = ["main", "run"]


def _emit_reports(reports: list[VerificationReport], fmt: str, stream) -> None:
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        json.dump(payload, stream, sort_keys=True, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(VerificationReport.CSV_FIELDS)
        for r in reports:
            writer.writerow(r.to_csv_row())
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            p_part = "" if r.p is None else f" p={r.p:g}"
            extra = ""
            if r.constant is not None:
                extra += f" constant={r.constant:.6g}"
            if r.ratio_max is not None:
                extra += f" ratio_max={r.ratio_max:.6g}"
            stream.write(
                f"[{status}] {r.id}{p_part} min_slack={r.min_slack:.3e}"
                f" argmin={r.argmin}{extra}\n"
            )
            for params, slack in r.violations[:5]:
                stream.write(f"    violation at {params}: slack={slack:.3e}\n")


def _exit_code(reports: list[VerificationReport]) -> int:
    return 0 if all(r.passed for r in reports) else 1


def _load_map(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise SystemExit(f"error: input file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise SystemExit(
            f"error: {path} is not valid JSON (line {exc.lineno}, column {exc.colno})"
        ) from None
    try:
        return map_from_dict(data)
    except ValueError as exc:
        raise SystemExit(f"error: {path}: {exc}") from None


def _cmd_constants(args, stream) -> int:
    rows = []
    for kind in SharpConstant:
        if kind is SharpConstant.ISOP:
            continue
        if args.p is None:
            continue
        try:
            rows.append((kind.value, sharp_constant(kind, p=args.p)))
        except ValueError:
            continue
    if args.n is not None:
        rows.append(("ISOP", sharp_constant(SharpConstant.ISOP, n=args.n)))
    if not rows:
        raise SystemExit("error: provide --p (and/or --n) inside a validity range")
    if args.format == "json":
        payload = {"p": args.p, "n": args.n, "constants": {k: v for k, v in rows}}
        json.dump(payload, stream, sort_keys=True, indent=2)
        stream.write("\n")
    elif args.format == "csv":
        writer = csv.writer(stream)
        writer.writerow(["constant", "value"])
        writer.writerows(rows)
    else:
        for name, value in rows:
            stream.write(f"{name:>14s} = {value:.6f}\n")
    return 0


def _cmd_norms(args, stream) -> int:
    m = _load_map(args.input)
    rows = [
        ("hardy", hardy_norm(m, args.p)),
        ("triple", triple_norm(m, args.p)),
        ("bergman", bergman_norm(m, args.p)),
        ("bergman_triple", bergman_triple_norm(m, args.p)),
    ]
    if args.r is not None:
        rows.append((f"mp(r={args.r:g})", mp_radius(m, args.p, args.r)))
    if args.format == "json":
        json.dump(
            {"p": args.p, "norms": {k: v for k, v in rows}}, stream, sort_keys=True, indent=2
        )
        stream.write("\n")
    elif args.format == "csv":
        writer = csv.writer(stream)
        writer.writerow(["norm", "value"])
        writer.writerows(rows)
    else:
        for name, value in rows:
            stream.write(f"{name:>16s} = {value:.12g}\n")
    return 0


def _cmd_hilbert(args, stream) -> int:
    m = _load_map(args.input)
    conj = conjugate_map(m)
    payload = map_to_dict(conj)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    else:
        json.dump(payload, stream, sort_keys=True, indent=2)
        stream.write("\n")
    return 0


def _cmd_verify_lemma(args, stream) -> int:
    try:
        tag = InequalityId(args.id)
    except ValueError:
        raise SystemExit(
            f"error: unknown inequality id {args.id!r}; choose from "
            + ", ".join(t.value for t in InequalityId)
        )
    grid = GridSpec(r_nodes=args.grid_r, t_nodes=args.grid_t, tolerance=args.tol)
    try:
        report = verify_pointwise(tag, args.p, grid)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    report.seed = args.seed
    _emit_reports([report], args.format, stream)
    return _exit_code([report])


def _cmd_subharmonic(args, stream) -> int:
    try:
        mid = Minorant(args.id)
    except ValueError:
        raise SystemExit(
            f"error: unknown minorant id {args.id!r}; choose from "
            + ", ".join(m.value for m in Minorant)
        )
    try:
        if mid in (Minorant.F_PAIR, Minorant.G_PAIR):
            from .gridlab import check_pluri_lines

            kwargs = {} if args.tol is None else {"tolerance": args.tol}
            report = check_pluri_lines(
                mid, args.p, n_lines=args.samples, seed=args.seed, **kwargs
            )
        else:
            kwargs = {} if args.tol is None else {"tolerance": args.tol}
            report = check_submean(
                mid, args.p, centers=args.samples, seed=args.seed, **kwargs
            )
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    _emit_reports([report], args.format, stream)
    return _exit_code([report])


def _cmd_verify_theorem(args, stream) -> int:
    try:
        tag = TheoremId(args.id)
    except ValueError:
        raise SystemExit(
            f"error: unknown theorem id {args.id!r}; choose from "
            + ", ".join(t.value for t in TheoremId)
        )
    p_or_n = args.n if args.n is not None else args.p
    if p_or_n is None:
        raise SystemExit("error: provide --p (or --n for BERGMAN_EMBEDDING)")
    try:
        report = verify_theorem(
            tag, p_or_n, samples=args.samples, degree=args.degree, seed=args.seed,
            rel_tol=args.tol,
        )
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    _emit_reports([report], args.format, stream)
    return _exit_code([report])


def _cmd_probe(args, stream) -> int:
    try:
        tag = TheoremId(args.id)
    except ValueError:
        raise SystemExit(f"error: unknown theorem id {args.id!r}")
    fractions = args.gamma_frac or [0.5, 0.9, 0.99]
    try:
        ratios = sharpness_probe(tag, args.p, fractions)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    increasing = all(b > a for a, b in zip(ratios, ratios[1:]))
    if args.format == "json":
        json.dump(
            {
                "id": tag.value,
                "p": args.p,
                "gamma_fractions": list(fractions),
                "ratios": ratios,
                "increasing": increasing,
            },
            stream,
            sort_keys=True,
            indent=2,
        )
        stream.write("\n")
    else:
        for frac, ratio in zip(fractions, ratios):
            stream.write(f"gamma = {frac:g} * pi/(2p)  ->  ratio = {ratio:.9f}\n")
        stream.write(f"increasing: {increasing}\n")
    return 0 if increasing else 1


def _cmd_suite(args, stream) -> int:
    grid = GridSpec(r_nodes=args.grid_r, t_nodes=args.grid_t)
    reports = battery.full_suite(
        seed=args.seed, grid=grid, samples=args.samples, degree=args.degree
    )
    out = stream
    if args.output:
        out = open(args.output, "w", encoding="utf-8")
    try:
        _emit_reports(reports, args.format, out)
        n_fail = sum(not r.passed for r in reports)
        if args.format == "human":
            out.write(f"suite: {len(reports) - n_fail}/{len(reports)} checks passed\n")
    finally:
        if args.output:
            out.close()
    return _exit_code(reports)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rieszlab",
        description="Verification laboratory for sharp inequalities for harmonic "
        "mappings f = g + conj(h) on the unit disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, *, fmt=True, seed=True, tol=None):
        if fmt:
            sp.add_argument("--format", choices=("human", "json", "csv"), default="human")
        if seed:
            sp.add_argument("--seed", type=int, default=0)
        if tol is not None:
            sp.add_argument("--tol", type=float, default=tol)

    sp = sub.add_parser("constants", help="print the closed-form constants at p (and n)")
    sp.add_argument("--p", type=float)
    sp.add_argument("--n", type=int)
    add_common(sp, seed=False)
    sp.set_defaults(handler=_cmd_constants)

    sp = sub.add_parser("norms", help="Hardy/mixed/Bergman norms of a map file")
    sp.add_argument("--input", required=True, help="harmonic map JSON file")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--r", type=float, help="also print M_p(f, r)")
    add_common(sp, seed=False)
    sp.set_defaults(handler=_cmd_norms)

    sp = sub.add_parser("hilbert", help="harmonic conjugate of a map file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--output", help="write the conjugate map JSON here")
    add_common(sp, seed=False)
    sp.set_defaults(handler=_cmd_hilbert)

    sp = sub.add_parser("verify-lemma", help="grid-verify a pointwise inequality")
    sp.add_argument("--id", required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--grid-r", type=int, default=2000)
    sp.add_argument("--grid-t", type=int, default=4000)
    add_common(sp, tol=1e-9)
    sp.set_defaults(handler=_cmd_verify_lemma)

    sp = sub.add_parser("subharmonic", help="sub-mean-value test of a minorant")
    sp.add_argument("--id", required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--samples", type=int, default=64, help="centers (or lines)")
    sp.add_argument("--tol", type=float, default=None, help="deficit tolerance")
    add_common(sp)
    sp.set_defaults(handler=_cmd_subharmonic)

    sp = sub.add_parser("verify-theorem", help="sample battery for a theorem tag")
    sp.add_argument("--id", required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--n", type=int)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--degree", type=int, default=8)
    add_common(sp, tol=1e-9)
    sp.set_defaults(handler=_cmd_verify_theorem)

    sp = sub.add_parser("probe-sharpness", help="Calderon family sharpness probe")
    sp.add_argument("--id", required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--gamma-frac", type=float, action="append")
    add_common(sp, seed=False)
    sp.set_defaults(handler=_cmd_probe)

    sp = sub.add_parser("suite", help="run the full verification battery")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--degree", type=int, default=8)
    sp.add_argument("--grid-r", type=int, default=2000)
    sp.add_argument("--grid-t", type=int, default=4000)
    sp.add_argument("--output", help="write the report stream to a file")
    add_common(sp)
    sp.set_defaults(handler=_cmd_suite)

    return parser


def run(argv: list[str] | None = None, stream=None) -> int:
    """Parse argv and dispatch; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed the message; normalize bad-args exits to 2
        return 2 if exc.code not in (0,) else 0
    stream = stream if stream is not None else sys.stdout
    try:
        return args.handler(args, stream)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
