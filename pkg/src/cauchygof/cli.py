"""Command line interface.

Subcommands:

``test``
    Run the battery of Cauchy goodness-of-fit tests on a data file and
    optionally write a JSON report.
``simulate``
    Monte Carlo size/power study over a grid of alternatives and sample
    sizes; writes CSV and JSON result files.
``critvals``
    Pre-generate Monte Carlo critical value tables into a cache directory.
``plotdata``
    Emit Q-Q and histogram coordinates as CSV for external plotting.

Exit codes: 0 success, 1 usage error, 2 data validation error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from ._version import __version__
from .classical_tests import (
    ALL_TESTS,
    DEFAULT_GH_LAMBDA,
    DEFAULT_TABLE_B,
    DEFAULT_TABLE_SEED,
    EL_TESTS,
    BatteryConfig,
    TableStore,
    qualified_test_id,
    run_battery,
)
from .distributions import DistributionSpec, standardize
from .errors import HullViolationError, NumericalError, ValidationError
from .reporting import (
    ReportDocument,
    parse_input,
    render_outcomes,
    write_histogram_csv,
    write_qq_csv,
)
from .simulation import StudyConfig, run_study
from .ustat import KernelMode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3

_MODES = [m.value for m in KernelMode]


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _test_list(text: str):
    tests = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    unknown = [t for t in tests if t not in ALL_TESTS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown test id(s) {unknown}; choose among {','.join(ALL_TESTS)}"
        )
    if not tests:
        raise argparse.ArgumentTypeError("empty test list")
    return tests


def _size_list(text: str):
    try:
        sizes = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse sizes {text!r}") from None
    if not sizes or any(n < 2 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 2")
    return sizes


def _table_b(text: str):
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"B must be an integer, got {text!r}") from None
    if b < 100:
        raise argparse.ArgumentTypeError("B must be at least 100")
    return b


def _alpha(text: str):
    try:
        a = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"alpha must be a number, got {text!r}") from None
    if not 0.0 < a < 1.0:
        raise argparse.ArgumentTypeError("alpha must lie strictly between 0 and 1")
    return a


def _add_input_flags(sub):
    sub.add_argument("data", help="path to a delimited text file of observations")
    sub.add_argument("--column", default=None,
                     help="column to read: integer index or header name (default: first)")
    sub.add_argument("--has-header", action="store_true",
                     help="treat the first row as a header")
    sub.add_argument("--prices", action="store_true",
                     help="interpret the column as prices and test the returns")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cauchy-gof",
                     description="Goodness-of-fit tests for the standard Cauchy distribution")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p_test = sub.add_parser("test", help="run the test battery on a data file")
    _add_input_flags(p_test)
    p_test.add_argument("--tests", type=_test_list, default=ALL_TESTS,
                        help=f"comma list of test ids (default: {','.join(ALL_TESTS)})")
    p_test.add_argument("--alpha", type=_alpha, default=0.05)
    p_test.add_argument("--mode", choices=_MODES, default=KernelMode.SYM6.value,
                        help="kernel symmetrization for the EL tests")
    p_test.add_argument("--standardize", choices=["off", "on", "both"], default="off",
                        help="test raw data, median/half-IQR standardized data, or both")
    p_test.add_argument("--mc-pvalues", action="store_true",
                        help="use Monte Carlo p-values for the EL tests too")
    p_test.add_argument("--B", type=_table_b, default=DEFAULT_TABLE_B,
                        help="Monte Carlo table size (minimum 100)")
    p_test.add_argument("--table-seed", type=int, default=DEFAULT_TABLE_SEED)
    p_test.add_argument("--gh-lambda", type=float, default=DEFAULT_GH_LAMBDA)
    p_test.add_argument("--cache-dir", default=None,
                        help="directory for critical value table files")
    p_test.add_argument("--out", default=None, help="write a JSON report here")
    p_test.set_defaults(func=cmd_test)

    p_sim = sub.add_parser("simulate", help="Monte Carlo size/power study")
    p_sim.add_argument("--alt", "--alts", action="append", default=None,
                       metavar="SPEC", dest="alt",
                       help="alternative as family:params, e.g. student_t:3 "
                            "(repeatable; default cauchy:0,1)")
    p_sim.add_argument("--sizes", type=_size_list, default=None,
                       help="comma list of sample sizes (default 20,40,60,100)")
    p_sim.add_argument("--reps", type=int, default=None,
                       help="replications per cell (default 2000)")
    p_sim.add_argument("--tests", type=_test_list, default=ALL_TESTS)
    p_sim.add_argument("--alpha", type=_alpha, default=0.05)
    p_sim.add_argument("--mode", choices=_MODES, default=KernelMode.SYM6.value)
    p_sim.add_argument("--seed", type=int, default=1729, help="master seed")
    p_sim.add_argument("--threads", type=int, default=1)
    p_sim.add_argument("--B", type=_table_b, default=DEFAULT_TABLE_B,
                       help="critical value table size (minimum 100)")
    p_sim.add_argument("--paper-scale", action="store_true",
                       help="full-scale defaults: 10000 reps, sizes 20,40,60,80,100")
    p_sim.add_argument("--cache-dir", default=None)
    p_sim.add_argument("--out-prefix", default="study",
                       help="result files <prefix>.csv and <prefix>.json")
    p_sim.set_defaults(func=cmd_simulate)

    p_cv = sub.add_parser("critvals", help="pre-generate critical value tables")
    p_cv.add_argument("--tests", type=_test_list, default=ALL_TESTS)
    p_cv.add_argument("--sizes", type=_size_list, required=True)
    p_cv.add_argument("--B", type=_table_b, default=DEFAULT_TABLE_B)
    p_cv.add_argument("--seed", type=int, default=DEFAULT_TABLE_SEED)
    p_cv.add_argument("--mode", choices=_MODES, default=KernelMode.SYM6.value,
                      help="kernel mode baked into EL test tables")
    p_cv.add_argument("--cache-dir", default="cvt_cache")
    p_cv.set_defaults(func=cmd_critvals)

    p_pd = sub.add_parser("plotdata", help="emit Q-Q and histogram CSV data")
    _add_input_flags(p_pd)
    p_pd.add_argument("--standardize", choices=["off", "on"], default="off")
    p_pd.add_argument("--bins", type=int, default=30)
    p_pd.add_argument("--out-prefix", default="plot",
                      help="output files <prefix>_qq.csv and <prefix>_hist.csv")
    p_pd.set_defaults(func=cmd_plotdata)

    return parser


def _check_el_preconditions(sample, tests):
    if not any(t in EL_TESTS for t in tests):
        return
    if sample.n < 4:
        raise ValidationError(
            f"the empirical likelihood tests need at least 4 observations, got {sample.n}"
        )
    zeros = np.flatnonzero(sample.values == 0.0)
    if zeros.size:
        raise ValidationError(
            f"observation {zeros[0] + 1} equals 0 exactly; the empirical likelihood "
            "kernel divides by each observation and requires all values nonzero"
        )


def cmd_test(args) -> int:
    sample = parse_input(args.data, column=args.column,
                         has_header=args.has_header, prices=args.prices)
    _check_el_preconditions(sample, args.tests)
    config = BatteryConfig(
        tests=args.tests,
        alpha=args.alpha,
        mode=KernelMode(args.mode),
        el_p_method="monte_carlo" if args.mc_pvalues else "chisq1",
        gh_lambda=args.gh_lambda,
        table_B=args.B,
        table_seed=args.table_seed,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
    )
    store = TableStore(config.cache_dir)
    variants = {"off": (False,), "on": (True,), "both": (False, True)}[args.standardize]
    documents = []
    for do_std in variants:
        if do_std:
            data, loc, scale = standardize(sample)
            preprocessing = {"standardized": True, "location": loc, "scale": scale}
            label = "standardized (median/half-IQR)"
        else:
            data, preprocessing = sample, {"standardized": False, "location": None, "scale": None}
            label = "raw"
        outcomes = run_battery(data, config, store)
        print(render_outcomes(outcomes, title=f"{args.data} [{label}] n={data.n}"))
        print()
        documents.append(
            ReportDocument(
                dataset={
                    "path": str(args.data),
                    "n": data.n,
                    "column": args.column,
                    "has_header": bool(args.has_header),
                    "prices": bool(args.prices),
                    "preprocessing": preprocessing,
                },
                outcomes=tuple(outcomes),
                config={
                    "tests": list(config.tests),
                    "alpha": config.alpha,
                    "mode": config.mode.value,
                    "el_p_method": config.el_p_method,
                    "gh_lambda": config.gh_lambda,
                    "table_B": config.table_B,
                    "table_seed": config.table_seed,
                },
            )
        )
    if args.out:
        payload = documents[0].to_dict() if len(documents) == 1 else [d.to_dict() for d in documents]
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print(f"report written to {args.out}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    alts = args.alt if args.alt else ["cauchy:0,1"]
    sizes = args.sizes
    reps = args.reps
    if args.paper_scale:
        sizes = sizes or (20, 40, 60, 80, 100)
        reps = reps or 10_000
    else:
        sizes = sizes or (20, 40, 60, 100)
        reps = reps or 2_000
    config = StudyConfig(
        alternatives=tuple(DistributionSpec.parse(a) for a in alts),
        sizes=sizes,
        reps=reps,
        alpha=args.alpha,
        tests=args.tests,
        mode=KernelMode(args.mode),
        master_seed=args.seed,
        threads=args.threads,
        table_B=args.B,
    )
    store = TableStore(Path(args.cache_dir) if args.cache_dir else None)
    result = run_study(config, store)
    csv_path = result.to_csv(f"{args.out_prefix}.csv")
    json_path = result.to_json(f"{args.out_prefix}.json")
    print(f"study results written to {csv_path} and {json_path}")
    return EXIT_OK


def cmd_critvals(args) -> int:
    cache = Path(args.cache_dir)
    store = TableStore(cache)
    for tid in args.tests:
        qid = qualified_test_id(tid, KernelMode(args.mode))
        for n in args.sizes:
            table = store.get(qid, n, args.B, args.seed)
            print(cache / table.filename)
    return EXIT_OK


def cmd_plotdata(args) -> int:
    sample = parse_input(args.data, column=args.column,
                         has_header=args.has_header, prices=args.prices)
    if args.standardize == "on":
        sample, _, _ = standardize(sample)
    if args.bins < 1:
        raise ValidationError("need at least one histogram bin")
    qq_path = write_qq_csv(sample, f"{args.out_prefix}_qq.csv")
    hist_path = write_histogram_csv(sample, f"{args.out_prefix}_hist.csv", bins=args.bins)
    print(f"plot data written to {qq_path} and {hist_path}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else int(exc.code)
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (NumericalError, HullViolationError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
