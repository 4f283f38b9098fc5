"""Command-line front end.

Usage::

    entdetect analyze state.json [--json]
    entdetect sweep --a 0.236 --eps 0.99:1:0.0001 --c 1 --n-tail 0 --out sweep.csv
    entdetect converge --a 0.232 --eps 0.9939 --c 0.999 --n-tail 1,2,4,8 --out conv.csv
    entdetect export --state example --a 0.232 --eps 0.9939 --out state.json

Exit codes: 0 success, 2 input or parse error, 3 numerical failure.
"""

import argparse
import json
import sys

import numpy as np

from .criteria import CRITERIA, VALUE_FIELDS, evaluate
from .io import SWEEP_HEADER, read_state, sweep_row, write_csv, write_state
from .states import DEFAULT_TAIL_RATIO, ExampleParams, example_state, max_entangled
from .sweep import converge, is_witness, make_grid, parse_range, run_grid, scan_thresholds
from .validation import InvalidStateError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3

CONVERGE_HEADER = SWEEP_HEADER + ("ccnr_additivity_residual",)


class InputError(Exception):
    pass


def _range_arg(text):
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None


def _print_report(report):
    out = sys.stdout
    w = max(len(f) for f in VALUE_FIELDS)
    for f in VALUE_FIELDS:
        print(f"{f:<{w}}  {getattr(report, f): .12g}", file=out)
    print(file=out)
    for name in CRITERIA:
        print(f"{name:<{w}}  {report.verdicts[name]}", file=out)
    print(f"{'overall':<{w}}  {report.verdict}", file=out)


def cmd_analyze(args):
    try:
        rho = read_state(args.path)
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc}") from exc
    report = evaluate(rho)
    if args.json:
        print(json.dumps(report.as_dict(), sort_keys=True))
    else:
        print(f"state: {args.path}  dims: {rho.dims.d_a}x{rho.dims.d_b}")
        _print_report(report)
    return EXIT_OK


def _write(path, header, rows):
    try:
        write_csv(path, header, rows)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def cmd_sweep(args):
    try:
        grid = make_grid(args.a, args.eps, args.c, args.n_tail, args.tail_ratio)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    reports = run_grid(grid, jobs=args.jobs)
    _write(args.out, SWEEP_HEADER, [sweep_row(p, r) for p, r in zip(grid, reports)])
    print(f"wrote {len(grid)} rows to {args.out}")
    for t in scan_thresholds(grid, reports):
        print(f"threshold {t.criterion}: a={t.a!r} c={t.c!r} grid epsilon={t.grid_value!r} "
              f"refined epsilon={t.refined:.7f}")
    witnesses = [p for p, r in zip(grid, reports) if is_witness(r)]
    if witnesses:
        lo = {k: min(getattr(p, k) for p in witnesses) for k in ("a", "epsilon", "c")}
        hi = {k: max(getattr(p, k) for p in witnesses) for k in ("a", "epsilon", "c")}
        spans = " ".join(f"{k}=[{lo[k]!r}, {hi[k]!r}]" for k in ("a", "epsilon", "c"))
        print(f"witness region: {len(witnesses)} points {spans}")
    else:
        print("witness region: empty")
    return EXIT_OK


def cmd_converge(args):
    try:
        study = converge(args.a, args.eps, args.c, args.n_tail, args.tail_ratio)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rows = [
        sweep_row(ExampleParams(args.a, args.eps, args.c, n, args.tail_ratio), r) + [res]
        for n, r, res in zip(study.levels, study.reports, study.additivity_residuals)
    ]
    _write(args.out, CONVERGE_HEADER, rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    for f in VALUE_FIELDS:
        print(f"max change {f}: {study.max_changes[f]:.3e}")
    print(f"max ccnr additivity residual: {max(study.additivity_residuals):.3e}")
    return EXIT_OK


def cmd_export(args):
    try:
        if args.state == "max-entangled":
            rho = max_entangled(args.d)
        else:
            rho = example_state(ExampleParams(args.a, args.eps, args.c, args.n_tail, args.tail_ratio))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        write_state(rho, args.out)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {rho.dims.d_a}x{rho.dims.d_b} state to {args.out}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="entdetect", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="evaluate all criteria on a state file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="emit the report as one JSON object")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="sweep the example family over a parameter grid")
    p.add_argument("--a", type=_range_arg, required=True, help="lo:hi:step or a single value")
    p.add_argument("--eps", type=_range_arg, required=True)
    p.add_argument("--c", type=_range_arg, default=(1.0,))
    p.add_argument("--n-tail", type=int, default=0)
    p.add_argument("--tail-ratio", type=float, default=DEFAULT_TAIL_RATIO)
    p.add_argument("--jobs", type=int, default=1, help="evaluate grid points on this many threads")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("converge", help="criterion values across tail truncation levels")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n-tail", type=_int_list, default=[1, 2, 4, 8, 16, 32])
    p.add_argument("--tail-ratio", type=float, default=DEFAULT_TAIL_RATIO)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("export", help="write a built-in state to a state file")
    p.add_argument("--state", choices=("max-entangled", "example"), default="example")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--a", type=float, default=0.232)
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--n-tail", type=int, default=0)
    p.add_argument("--tail-ratio", type=float, default=DEFAULT_TAIL_RATIO)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except InvalidStateError as exc:
        print(f"error: invalid state ({exc})", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"error: numerical failure ({exc})", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
