# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Base module of the pre-Lie operad verification kernel.
"""

__version__ = "1.0"
