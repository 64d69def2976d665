#!/usr/bin/env python3

# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
A script running the verification checks.
"""

import argparse
import logging
import sys

from prelie_verifier.utils.logger import VERBOSITY_LEVELS, configure_logging
from prelie_verifier.verification import (
    CHECKS,
    VerifyConfig,
    VerifyUsageException,
    run,
)

USAGE_ERROR = 2


def create_parser() -> argparse.ArgumentParser:
    """
    Creates the parser of the `verify` command.

    Returns
    -------
    argparse.ArgumentParser :
        The parser
    """
    parser = argparse.ArgumentParser(
        prog="prelie_verifier verify",
        description="Runs exact checks of the construction of the pre-Lie "
        "operad from Lie elements and cyclic Lie elements",
    )
    parser.add_argument(
        "checks",
        help="Check ids to run, or 'all'; see the list-checks command",
        nargs="+",
        metavar="check-id",
    )
    parser.add_argument(
        "--max-arity",
        help="Largest arity of checks in the rooted-tree model",
        type=int,
        default=6,
    )
    parser.add_argument(
        "--quotient-max-arity",
        help="Largest arity of checks on quotients of free operads",
        type=int,
        default=5,
    )
    parser.add_argument(
        "--egf-order",
        "--order",
        help="Truncation order of generating functions",
        dest="egf_order",
        type=int,
        default=8,
    )
    parser.add_argument(
        "--format",
        help="Output format",
        dest="output_format",
        choices=["text", "json"],
        default="text",
    )
    parser.add_argument(
        "--parallel",
        help="Number of worker processes running independent checks",
        type=int,
        default=1,
    )
    parser.add_argument(
        "--allow-long-running",
        help="Raises the arity caps to 7 for rooted trees and 6 for "
        "quotients of free operads",
        action="store_true",
    )
    parser.add_argument(
        "--samples",
        help="Random instances drawn by sampling checks",
        type=int,
        default=500,
    )
    parser.add_argument(
        "--seed",
        help="Seed of the sampling checks",
        type=int,
        default=0,
    )
    parser.add_argument(
        "--verbosity",
        help="Verbosity level",
        choices=VERBOSITY_LEVELS,
        default="WARNING",
        type=str.upper,
    )
    return parser


def script_verify(argv=None) -> int:
    """
    Implements the `verify` command.

    Uses argparse for collecting parameters.

    Parameters
    ----------
    argv : Optional[List[str]]
        Arguments, taken from ``sys.argv`` when None

    Returns
    -------
    int :
        0 when every result passed or is divergent, 1 when some failed,
        2 for usage errors
    """
    args = create_parser().parse_args(argv)
    configure_logging(args.verbosity)
    config = VerifyConfig(**vars(args))
    try:
        report = run(config)
    except VerifyUsageException as ex:
        logging.error(str(ex))
        print(f"error: {ex}", file=sys.stderr)
        print(f"available checks: {', '.join(CHECKS)}", file=sys.stderr)
        return USAGE_ERROR
    if config.output_format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    ret = script_verify()
    sys.exit(ret)
