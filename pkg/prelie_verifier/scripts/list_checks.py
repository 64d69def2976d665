#!/usr/bin/env python3

# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
A script listing the available verification checks.
"""

import argparse
import sys

from prelie_verifier.verification import CHECKS


def script_list_checks(argv=None) -> int:
    """
    Prints every check id with the quantities it compares.

    Parameters
    ----------
    argv : Optional[List[str]]
        Arguments, taken from ``sys.argv`` when None

    Returns
    -------
    int :
        Always 0
    """
    parser = argparse.ArgumentParser(
        prog="prelie_verifier list-checks",
        description="Lists the checks accepted by the verify command",
    )
    parser.add_argument(
        "--ids-only",
        help="Prints the identifiers only",
        action="store_true",
    )
    args = parser.parse_args(argv)
    width = max(len(check_id) for check_id in CHECKS)
    for check in CHECKS.values():
        if args.ids_only:
            print(check.check_id)
        else:
            print(f"{check.check_id:<{width}}  {check.description}")
    return 0


if __name__ == "__main__":
    ret = script_list_checks()
    sys.exit(ret)
