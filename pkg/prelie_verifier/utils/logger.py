# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Module providing logging functionality.
"""

import logging

VERBOSITY_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(processName)s: %(message)s"


def string_to_verbosity(level: str) -> int:
    """
    Maps verbosity string to corresponding logging enum.

    Parameters
    ----------
    level : str
        Name of the level, case-insensitive

    Returns
    -------
    int :
        Logging level

    Raises
    ------
    ValueError :
        Raised when the level is not one of `VERBOSITY_LEVELS`
    """
    levelconversion = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }
    try:
        return levelconversion[level.upper()]
    except KeyError:
        raise ValueError(
            f"Unknown verbosity {level}, expected one of {VERBOSITY_LEVELS}"
        )


def configure_logging(level: str):
    """
    Configures the root logger used by all modules of the verifier.

    Worker processes of parallel runs inherit the configuration,
    hence the process name in the format.

    Parameters
    ----------
    level : str
        Verbosity name passed from the command line
    """
    logging.basicConfig(
        level=string_to_verbosity(level),
        format=LOG_FORMAT,
        force=True,
    )
