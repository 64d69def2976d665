# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Command-line entry point of the pre-Lie operad verifier.
"""

import argparse
import sys


def script_handler(argv, command):  # noqa: D103
    ret = 0

    if command == "verify":
        from prelie_verifier.scripts.verify import script_verify

        ret = script_verify(argv[1:])
    if command == "list-checks":
        from prelie_verifier.scripts.list_checks import script_list_checks

        ret = script_list_checks(argv[1:])

    return ret


def main():  # noqa: D103
    parser = argparse.ArgumentParser(
        prog="prelie_verifier",
        description="Command-line interface of the pre-Lie operad verifier",
        add_help=False,
    )

    parser.add_argument(
        "command",
        help="Command to execute",
        choices=["verify", "list-checks"],
    )

    args = parser.parse_known_args()

    sys.argv.remove(args[0].command)

    return script_handler(sys.argv, args[0].command)


if __name__ == "__main__":
    result = main()
    sys.exit(result)
