"""Command-line front end.

Subcommands mirror the library surface: eval, classify, enclose, find-min,
verify, dominance, profile.  Default output is text to stdout; ``--format
json`` (or csv where a report has rows) plus ``--output`` write machine-
readable files.

Exit status: 0 on success, 1 when a verification suite finds a violation of a
trusted bound (the known-errata entry is expected to fail and does not count),
2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import catalog as cat
from . import family as fam
from . import kernel as ker
from . import oracle as orc
from .errors import ArctanBoundsError

ENV_DIGITS = "ARCTANBOUNDS_DIGITS"

#: Parameters swept per family bound by `verify --suite all`.
SUITE_FAMILY_PARAMS = {
    cat.BoundId.FAMILY_LOWER: (0.0, 0.1, 0.25, 0.5),
    cat.BoundId.FAMILY_UPPER: (0.0, 0.1, 0.25, 0.5),
    cat.BoundId.REVERSED_LOWER: (cat.TWO_OVER_PI, 0.7, 1.0, 2.0),
    cat.BoundId.REVERSED_UPPER: (cat.TWO_OVER_PI, 0.7, 1.0, 2.0),
    cat.BoundId.MID_REGIME_LOWER: (0.55, 0.6),
    cat.BoundId.MID_REGIME_UPPER: (0.55, 0.6),
}


def _env_digits(fallback: int) -> int:
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def _grid_from_args(args) -> orc.GridSpec:
    return orc.GridSpec(args.grid_min, args.grid_max, args.grid_points,
                        args.grid_spacing)


def _add_grid_args(p: argparse.ArgumentParser, points: int) -> None:
    p.add_argument("--grid-min", type=float, default=1e-8)
    p.add_argument("--grid-max", type=float, default=1e8)
    p.add_argument("--grid-points", type=int, default=points)
    p.add_argument("--grid-spacing", choices=["log", "linear"], default="log")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--output", default=None, help="write the report to a file")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _bound_arg(value: str) -> cat.BoundId:
    try:
        return cat.BoundId(value)
    except ValueError:
        choices = ", ".join(b.value for b in cat.BoundId)
        raise argparse.ArgumentTypeError(f"unknown bound {value!r}; one of: {choices}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arctan-bounds",
        description="Certified closed-form bounds for arctan: evaluate, "
                    "classify, verify, compare, and profile.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one catalog bound at a point")
    p.add_argument("--bound", type=_bound_arg, required=True,
                   metavar="ID", help="bound identifier, e.g. shafer-lower")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--a", type=float, default=None, help="family parameter")
    p.add_argument("--digits", type=int, default=_env_digits(0),
                   help="also print a fixed-point evaluation at this many digits")
    _add_output_args(p)

    p = sub.add_parser("classify", help="monotonicity regime of a parameter")
    p.add_argument("--a", type=float, required=True)
    _add_output_args(p)

    p = sub.add_parser("enclose", help="two-sided enclosure of arctan at a point")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    _add_output_args(p)

    p = sub.add_parser("find-min", help="interior minimum of the family ratio")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--max-iterations", type=int, default=200)
    _add_output_args(p)

    p = sub.add_parser("verify", help="sweep the catalog against the oracle")
    p.add_argument("--suite", choices=["all", "fixed", "family"], default="all")
    _add_grid_args(p, points=10_000)
    p.add_argument("--digits", type=int, default=_env_digits(orc.DEFAULT_SWEEP_DIGITS),
                   help="oracle digits; below 50 the thinnest margins on the "
                        "default grid are unresolvable")
    _add_output_args(p)

    p = sub.add_parser("dominance", help="which of two same-side bounds is tighter where")
    p.add_argument("--bound-a", type=_bound_arg, required=True, metavar="ID")
    p.add_argument("--bound-b", type=_bound_arg, required=True, metavar="ID")
    p.add_argument("--param-a", type=float, default=None)
    p.add_argument("--param-b", type=float, default=None)
    _add_grid_args(p, points=2_000)
    p.add_argument("--digits", type=int, default=_env_digits(orc.DEFAULT_SWEEP_DIGITS))
    _add_output_args(p)

    p = sub.add_parser("profile", help="certified vs actual kernel error over a grid")
    p.add_argument("--a-low", type=float, default=ker.DEFAULT_KERNEL.a_low)
    p.add_argument("--a-high", type=float, default=ker.DEFAULT_KERNEL.a_high)
    p.add_argument("--crossover", type=float, default=ker.DEFAULT_KERNEL.crossover)
    _add_grid_args(p, points=2_000)
    p.add_argument("--digits", type=int, default=_env_digits(orc.DEFAULT_DIGITS))
    _add_output_args(p)

    return parser


def _cmd_eval(args) -> int:
    value = cat.eval_bound(args.bound, args.x, args.a)
    payload = {"bound": args.bound.value, "x": args.x, "a": args.a, "value": value}
    if args.digits:
        payload["value_hp"] = cat.eval_bound_hp(
            args.bound, args.x, args.a, digits=args.digits).as_decimal_string()
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        line = f"{args.bound.value}(x={args.x!r}" + \
               (f", a={args.a!r}" if args.a is not None else "") + f") = {value!r}"
        if "value_hp" in payload:
            line += f"\nfixed-point [{args.digits} digits] = {payload['value_hp']}"
        _emit(args, line)
    return 0


def _cmd_classify(args) -> int:
    regime = cat.classify_regime(args.a)
    if args.format == "json":
        _emit(args, json.dumps({"a": args.a, "regime": regime.value}))
    else:
        _emit(args, regime.value)
    return 0


def _cmd_enclose(args) -> int:
    enc = cat.enclosure(args.a, args.x)
    payload = {"a": args.a, "x": args.x, "lower": enc.lower, "upper": enc.upper,
               "half_width": enc.half_width, "midpoint": enc.midpoint}
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, f"arctan({args.x!r}) in ({enc.lower!r}, {enc.upper!r})"
                    f"  half_width={enc.half_width!r}")
    return 0


def _cmd_find_min(args) -> int:
    config = fam.SolverConfig(tolerance=args.tolerance,
                              max_iterations=args.max_iterations)
    res = fam.find_interior_minimum(args.a, config)
    payload = {"a": args.a, "x0": res.x0, "value": res.value, "u": res.u,
               "residual": res.residual}
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, f"minimum of the ratio at a={args.a!r}: x0={res.x0!r} "
                    f"value={res.value!r} u={res.u!r} residual={res.residual!r}")
    return 0


def _suite_entries(suite: str):
    fixed = [(b, None) for b in cat.BoundId
             if not cat.bound_takes_param(b)]
    family = [(b, a) for b, params in SUITE_FAMILY_PARAMS.items() for a in params]
    if suite == "fixed":
        return fixed
    if suite == "family":
        return family
    return fixed + family


def _cmd_verify(args) -> int:
    grid = _grid_from_args(args)
    results = []
    failed = False
    for bound, a in _suite_entries(args.suite):
        report = orc.sweep(bound, a=a, grid=grid, digits=args.digits)
        entry = report.to_json_dict()
        if cat.bound_is_trusted(bound):
            entry["status"] = "ok" if report.ok else "violation"
            failed = failed or not report.ok
        else:
            entry["status"] = ("known-errata-confirmed" if not report.ok
                               else "known-errata-not-reproduced")
        if len(entry["violations"]) > 25:
            entry["violations"] = entry["violations"][:25]
            entry["violations_truncated"] = True
        results.append(entry)

    payload = {
        "suite": args.suite,
        "digits": args.digits,
        "grid": {"x_min": grid.x_min, "x_max": grid.x_max,
                 "points": grid.points, "spacing": grid.spacing},
        "results": results,
        "ok": not failed,
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = []
        for entry in results:
            label = entry["bound"] + (f"[a={entry['a']}]" if entry["a"] is not None else "")
            lines.append(f"{entry['status']:>28}  {label:34s} "
                         f"violations={entry['violation_count']:<6d} "
                         f"min_margin={entry['min_margin']:.3e}")
        lines.append(f"suite={args.suite} ok={not failed}")
        _emit(args, "\n".join(lines))
    return 0 if not failed else 1


def _cmd_dominance(args) -> int:
    report = orc.dominance_report(args.bound_a, args.bound_b,
                                  a_a=args.param_a, a_b=args.param_b,
                                  grid=_grid_from_args(args), digits=args.digits)
    if args.format == "json":
        _emit(args, json.dumps(report.to_json_dict(), indent=2))
    else:
        lines = [f"side={report.side}  A={report.bound_a.value} B={report.bound_b.value}",
                 f"points: A tighter {report.a_tighter}, B tighter {report.b_tighter}, "
                 f"equal(<{orc.DOMINANCE_EQUAL_RTOL} rel) {report.equal}",
                 f"raw signs: A {report.a_strict}, B {report.b_strict}, zero {report.zero_diff}"]
        for region in report.regions:
            lines.append(f"  [{region.x_lo:.6e}, {region.x_hi:.6e}] {region.verdict}")
        if report.crossovers:
            lines.append("crossovers: " + ", ".join(f"{c!r}" for c in report.crossovers))
        _emit(args, "\n".join(lines))
    return 0


def _cmd_profile(args) -> int:
    spec = ker.KernelSpec(args.a_low, args.a_high, args.crossover)
    prof = ker.error_profile(spec, _grid_from_args(args), digits=args.digits)
    if args.format == "csv":
        if args.output:
            with open(args.output, "w", newline="", encoding="utf-8") as handle:
                prof.write_csv(handle)
        else:
            prof.write_csv(sys.stdout)
    elif args.format == "json":
        _emit(args, json.dumps(prof.to_json_dict(), indent=2))
    else:
        d = prof.to_json_dict()
        _emit(args, f"kernel a_low={spec.a_low!r} a_high={spec.a_high!r} "
                    f"crossover={spec.crossover!r}\n"
                    f"max certified error = {prof.max_certified!r}\n"
                    f"max actual error    = {prof.max_actual!r}\n"
                    f"certified everywhere: {d['certified_everywhere']}")
    return 0


_HANDLERS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "enclose": _cmd_enclose,
    "find-min": _cmd_find_min,
    "verify": _cmd_verify,
    "dominance": _cmd_dominance,
    "profile": _cmd_profile,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ArctanBoundsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
