"""Command-line entry points: ``verify`` runs suites, ``sweep`` writes CSVs.

Exit codes: 0 all checks passed, 1 violations found, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .harness import SWEEP_FAMILIES, SuiteConfig, run_suite, sweep_rows, write_sweep_csv


def _parse_range(text: str, name: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{name} must look like LO..HI, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyadicref",
        description="Verify dyadic refinements of Jensen- and Young-type inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run randomized verification suites")
    verify.add_argument("--suite", choices=["scalar", "matrix", "all"], default="all")
    verify.add_argument("--trials", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--tol", type=float, default=1e-12,
                        help="relative slack tolerance for scalar chains")
    verify.add_argument("--psd-tol", type=float, default=1e-8,
                        help="tolerance scale for matrix order checks")
    verify.add_argument("--max-depth", type=int, default=5)
    verify.add_argument("--dims", type=str, default="2..6", metavar="MIN..MAX")
    verify.add_argument("--out", type=str, default=None,
                        help="write the JSON report here instead of stdout")
    verify.add_argument("--complex", action="store_true",
                        help="use complex fixtures only (default alternates real/complex)")
    verify.add_argument("--no-timestamp", action="store_true",
                        help="omit timestamp and timing so reports are byte-stable")
    verify.add_argument("--range-exp", type=float, default=3.0,
                        help="scalar endpoints are log-uniform in [10^-x, 10^x]")
    verify.add_argument("--cond-max", type=float, default=1e3,
                        help="condition number cap for matrix fixtures")

    sweep = sub.add_parser("sweep", help="tabulate one family's tightness over (v, N)")
    sweep.add_argument("--family", required=True, choices=sorted(SWEEP_FAMILIES))
    sweep.add_argument("--a", type=float, required=True)
    sweep.add_argument("--b", type=float, required=True)
    sweep.add_argument("--grid", type=int, default=33, help="number of v points")
    sweep.add_argument("--depths", type=str, default="0..3", metavar="LO..HI")
    sweep.add_argument("--csv", type=str, required=True)
    return parser


def _cmd_verify(args, parser) -> int:
    try:
        cfg = SuiteConfig(
            suite=args.suite,
            trials=args.trials,
            seed=args.seed,
            max_depth=args.max_depth,
            dim_range=_parse_range(args.dims, "--dims"),
            tol=args.tol,
            psd_tol=args.psd_tol,
            out_path=args.out,
            complex_mode="complex" if getattr(args, "complex") else "mix",
            timestamp=not args.no_timestamp,
            range_exp=args.range_exp,
            cond_max=args.cond_max,
        ).validate()
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    code, report = run_suite(cfg)
    text = json.dumps(report, indent=2, sort_keys=True)
    if cfg.out_path:
        try:
            with open(cfg.out_path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return code


def _cmd_sweep(args, parser) -> int:
    try:
        lo, hi = _parse_range(args.depths, "--depths")
        if lo < 0 or hi < lo:
            raise ValueError(f"--depths must satisfy 0 <= LO <= HI, got {args.depths!r}")
        if not (args.a > 0 and args.b > 0):
            raise ValueError("--a and --b must be positive")
        rows = sweep_rows(args.family, args.a, args.b, args.grid, range(lo, hi + 1))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(str(exc))
    try:
        write_sweep_csv(rows, args.csv)
    except OSError as exc:
        print(f"error: cannot write CSV: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    return _cmd_sweep(args, parser)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
