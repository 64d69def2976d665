# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

import pytest

from prelie_verifier.combinatorics import label_range
from prelie_verifier.exact_linalg import SpeciesVector
from prelie_verifier.expression_parser import parse_vector
from prelie_verifier.prelie_trees import enumerate_rooted_trees
from prelie_verifier.verification import VerifyConfig


@pytest.fixture
def small_config() -> VerifyConfig:
    """
    Fixture that returns settings small enough for unit tests.

    Returns
    -------
    VerifyConfig :
        Settings with arities at most four and few samples
    """
    return VerifyConfig(
        checks=("all",),
        max_arity=4,
        quotient_max_arity=4,
        egf_order=6,
        samples=20,
        seed=7,
        verbosity="WARNING",
    )


@pytest.fixture
def arity_three_trees() -> tuple:
    """
    Fixture that returns the nine rooted trees on labels 1, 2, 3.

    Returns
    -------
    tuple :
        RootedTree values
    """
    return enumerate_rooted_trees(label_range(3))


@pytest.fixture
def arity_three_vectors(arity_three_trees) -> list:
    """
    Fixture that wraps `arity_three_trees` into basis vectors.

    Returns
    -------
    list :
        One SpeciesVector per tree
    """
    return [SpeciesVector.basis(tree) for tree in arity_three_trees]


@pytest.fixture
def jacobi_element() -> SpeciesVector:
    """
    Fixture that returns ``[[1,2],3] - [1,[2,3]] - [[1,3],2]``.

    Returns
    -------
    SpeciesVector :
        The Jacobi element written with both bracketings
    """
    return parse_vector("[[1,2],3] - [1,[2,3]] - [[1,3],2]")
