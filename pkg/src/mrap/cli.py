"""Command-line entry point: ``mrap <verb> ...``.

Exit status is 0 on success, 1 when a check finds a mismatch and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .qfield import QQ, Field, field_from_disc, mk_field, render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args) -> Field:
    if args.disc is not None and args.D is not None:
        raise UsageError("give at most one of --disc and --D")
    if args.disc is not None:
        f = field_from_disc(args.disc)
        if f is None:
            raise UsageError(f"{args.disc} is not a fundamental discriminant")
        return f
    if args.D is not None:
        if args.D == 0:
            raise UsageError("D must be nonzero")
        return mk_field(args.D)
    return QQ


def _instance(args):
    from .solver import MRInstance

    f = _field(args)
    try:
        inst = MRInstance.of(args.a, args.b, args.c, args.d, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not inst.d:
        raise UsageError("d must be nonzero")
    return inst


def _add_instance_args(p: argparse.ArgumentParser, with_d: bool = True) -> None:
    p.add_argument("--a", default="1", help="coefficient, written u+v*a (default 1)")
    p.add_argument("--b", default="1")
    p.add_argument("--c", default="1")
    if with_d:
        p.add_argument("--d", required=True)
    _add_field_args(p)


def _add_field_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("field (default Q)")
    g.add_argument("--disc", type=int, help="field discriminant, e.g. 8 for Q(sqrt(2)), -4 for Q(i)")
    g.add_argument("--D", type=int, help="radicand; normalized to its squarefree part")


def cmd_solve(args) -> int:
    from .solver import solve_ap

    inst = _instance(args)
    rep = solve_ap(inst, args.fallback_height)
    if args.json:
        doc = {
            "instance": [render(x) for x in (inst.a, inst.b, inst.c, inst.d)],
            "D": inst.field.D,
            "omega": inst.field.omega_text,
            "count": rep.count,
            "triples": [t.render() for t in rep.triples],
            "degenerate_fallback": rep.degenerate_fallback,
        }
        print(json.dumps(doc, sort_keys=True))
        return EXIT_OK
    print(f"# {inst}, a = {inst.field.omega_text}")
    if rep.degenerate_fallback:
        print(f"# degenerate coefficients: brute force up to height {rep.fallback_height}")
    for t in rep.triples:
        print(f"{t}\t{t.render()}")
    print(f"# count {rep.count}")
    if args.records:
        for r in rep.records:
            ext = f" ext {r.extension}" if r.extension else ""
            print(f"# k1={render(r.k1)} u1={render(r.u1)} k2={render(r.k2)} u2={render(r.u2)} z={r.z}{ext}")
    return EXIT_OK


def cmd_exists(args) -> int:
    from .solver import has_nontrivial

    inst = _instance(args)
    ex = has_nontrivial(inst)
    print(f"{inst}: nontrivial={'yes' if ex else 'no'} clause={ex.clause or '-'}")
    if ex.disagreement:
        print("# the divisibility form of clause (b) disagrees with point integrality")
    return EXIT_OK


def _scan_spec(args, d_range, disc_range, nonrational_only):
    from .scan import ScanSpec

    if args.D_list:
        D_list, disc_range = tuple(args.D_list), None
    else:
        D_list = None
    fmt = args.format or ("json" if args.out and str(args.out).endswith(".json") else "csv")
    try:
        return ScanSpec(
            d_range=d_range, disc_range=disc_range, D_list=D_list, a=args.a, b=args.b, c=args.c,
            mode=args.mode, output=args.out, fmt=fmt, jobs=args.jobs, cache=args.cache,
            nonrational_only=nonrational_only, plot=not args.no_plot,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _print_scan(result) -> None:
    diff = result.differing()
    print(f"# {len(result.rows)} rows, {len(diff)} with progressions beyond Q")
    for r in diff:
        print(f"d={r.d} D={r.D} count={r.count}")
    for f in result.files:
        print(f"# wrote {f}")


def cmd_scan(args) -> int:
    from .scan import scan

    spec = _scan_spec(args, (args.d_min, args.d_max), (args.disc_min, args.disc_max), args.nonrational_only)
    _print_scan(scan(spec))
    return EXIT_OK


def cmd_scan_full(args) -> int:
    from .scan import scan

    spec = _scan_spec(args, (1, args.d_max), (args.disc_min, args.disc_max), True)
    _print_scan(scan(spec))
    return EXIT_OK


def cmd_shortlist(args) -> int:
    from .scan import imaginary_shortlist

    try:
        pairs = imaginary_shortlist(args.a, args.b, args.c, filtered=not args.unfiltered)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for d, D in pairs:
        print(f"d={d} D={D}")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .scan import verify_paper

    ver = verify_paper()
    for c in ver.checks:
        print(c.line())
    n_ok = sum(c.ok for c in ver.checks)
    print(f"# {n_ok}/{len(ver.checks)} checks passed")
    if args.plot:
        from .report import plot_verification

        print(f"# wrote {plot_verification(ver, Path(args.plot))}")
    return EXIT_OK if ver.ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    from .oracle import HeightBound, brute_force_ap
    from .solver import solve_ap

    inst = _instance(args)
    try:
        bound = HeightBound(args.height)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    found = sorted(brute_force_ap(inst, bound), key=lambda t: t.sort_key())
    for t in found:
        print(f"{t}\t{t.render()}")
    print(f"# {len(found)} progressions with height <= {args.height}")
    if args.check:
        solved = {t for t in solve_ap(inst).triples if t.height() <= args.height}
        if solved != set(found):
            print("# MISMATCH with solve_ap")
            return EXIT_MISMATCH
        print("# agrees with solve_ap")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mrap",
        description="Arithmetic progressions on a*x^2 + b*y^2 + c*z^2 = d*x*y*z over Q and quadratic fields.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("solve", help="all integral progressions of one instance")
    _add_instance_args(s)
    s.add_argument("--json", action="store_true")
    s.add_argument("--records", action="store_true", help="also list the candidate X values")
    s.add_argument("--fallback-height", type=int, default=25)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("exists", help="is there a nontrivial progression, and why")
    _add_instance_args(s)
    s.set_defaults(func=cmd_exists)

    def scan_common(s):
        s.add_argument("--a", type=int, default=1)
        s.add_argument("--b", type=int, default=1)
        s.add_argument("--c", type=int, default=1)
        s.add_argument("--D-list", type=int, nargs="+", help="explicit radicands instead of a discriminant range")
        s.add_argument("--out", type=Path)
        s.add_argument("--format", choices=("csv", "json"))
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--cache", type=Path, help="JSON-lines journal for resumable scans")
        s.add_argument("--mode", choices=("solve", "exists"), default="solve")
        s.add_argument("--no-plot", action="store_true")

    s = sub.add_parser("scan", help="scan d and field discriminant ranges")
    s.add_argument("--d-min", type=int, default=1)
    s.add_argument("--d-max", type=int, default=20)
    s.add_argument("--disc-min", type=int, default=2)
    s.add_argument("--disc-max", type=int, default=200)
    s.add_argument("--nonrational-only", action="store_true")
    scan_common(s)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("scan-full", help="long-running scan, d <= 1000 and disc <= 10000; only rows beyond Q are kept")
    s.add_argument("--d-max", type=int, default=1000)
    s.add_argument("--disc-min", type=int, default=2)
    s.add_argument("--disc-max", type=int, default=10000)
    scan_common(s)
    s.set_defaults(func=cmd_scan_full)

    s = sub.add_parser("shortlist", help="imaginary quadratic (d, D) candidates")
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--b", type=int, default=1)
    s.add_argument("--c", type=int, default=1)
    s.add_argument("--unfiltered", action="store_true")
    s.set_defaults(func=cmd_shortlist)

    s = sub.add_parser("verify-paper", help="regression against the published tables")
    s.add_argument("--plot", help="write a count comparison figure to this path")
    s.set_defaults(func=cmd_verify_paper)

    s = sub.add_parser("oracle", help="brute-force enumeration up to a height")
    _add_instance_args(s)
    s.add_argument("--height", type=int, required=True)
    s.add_argument("--check", action="store_true", help="compare with solve_ap, exit 1 on mismatch")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mrap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"mrap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
