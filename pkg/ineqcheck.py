#!/usr/bin/env python3
"""
ineqcheck.py - verification runs for discrete Hardy/Rellich inequalities and rearrangements.

Every command runs one suite of checks and writes a JSON or CSV report that
embeds the run configuration and seed.

Usage:
    python ineqcheck.py identity --kmax 16
    python ineqcheck.py search --labelling spiral --p 2 --budget 30s
    python ineqcheck.py tables --constants H,HR,R --dmax 64 --format csv --out tables.csv
    python ineqcheck.py hardy1d --config run.json --seed 7

Exit codes:
    0  every check passed
    1  at least one check failed (the report carries the first counterexample)
    2  invalid configuration or a parameter outside its admissible range
"""
from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

from latticeineq import (
    RUN_LOG,
    InequalityError,
    emit_report,
    load_run_config,
    log_error,
    run_suite,
    write_report,
)
from latticeineq.config import LOG_LEVEL
from latticeineq.errors import CONFIG
from latticeineq.run_config import COMMANDS
from latticeineq.utils import append_jsonl, utc_timestamp

logger = logging.getLogger(__name__)


def _float_list(text: str) -> List[float]:
    try:
        return [math.inf if part.strip() == "inf" else float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _p_value(text: str) -> float:
    if text.strip() == "inf":
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or inf, got {text!r}")


def _name_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with run parameters; flags override it")
    common.add_argument("--seed", type=int, help="RNG seed (default 0 or LATTICEINEQ_SEED)")
    common.add_argument("--grid", type=int, help="Samples per axis for Fourier grids")
    common.add_argument("--pvalues", type=_float_list, help="Comma-separated exponents, e.g. 1,2,inf")
    common.add_argument("--dmax", type=int, help="Largest dimension in sweeps")
    common.add_argument("--kmax", type=int, help="Largest order in identity checks")
    common.add_argument("--budget", help="Search budget: evaluations (2000) or seconds (30s)")
    common.add_argument("--format", choices=["json", "csv"], help="Report format (default json)")
    common.add_argument("--out", help="Report path (default stdout)")
    common.add_argument("--labelling", choices=["spiral", "wang_wang", "l1"], help="Labelling for search")
    common.add_argument("--p", type=_p_value, help="Exponent for search")
    common.add_argument("--constants", type=_name_list, help="Comma-separated constants for tables from H,HR,R,C,C_tilde")
    common.add_argument("--trials", type=int, help="Random functions per randomized check")
    common.add_argument(
        "--log-level",
        dest="log_level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default INFO or LATTICEINEQ_LOG_LEVEL)",
    )

    parser = argparse.ArgumentParser(
        description="Discrete Hardy/Rellich inequality and rearrangement checks"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command in COMMANDS:
        sub.add_parser(command, parents=[common], help=f"run the {command} suite")
    return parser.parse_args(argv)


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    keys = (
        "command", "seed", "grid", "pvalues", "dmax", "kmax", "budget", "format",
        "out", "labelling", "p", "constants", "trials", "log_level",
    )
    return {key: getattr(args, key) for key in keys}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    load_dotenv()
    args = parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, (args.log_level or LOG_LEVEL).upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    try:
        config = load_run_config(args.config, _overrides(args))
    except ValueError as e:
        logger.error(f"Config error: {e}")
        log_error(CONFIG, str(e), {"command": args.command})
        print("usage: ineqcheck.py <command> [options]; see --help", file=sys.stderr)
        return 2

    try:
        result = run_suite(config)
    except InequalityError as e:
        logger.error(f"{config.command}: {e}")
        log_error(e.error_type, e.message, {"command": config.command, **e.context})
        return 2

    write_report(emit_report(result.records(), config, config.format), config.out)

    failure = result.first_failure
    append_jsonl(RUN_LOG, {
        "ts": utc_timestamp(),
        "command": config.command,
        "seed": config.seed,
        "checks": len(result.checks),
        "passed": result.passed,
        "first_failure": failure.check_id if failure else None,
        "out": config.out,
    })

    if failure is not None:
        logger.warning(f"{config.command}: check {failure.check_id} failed")
        return 1
    logger.info(f"{config.command}: all {len(result.checks)} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
