# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelie_verifier.combinatorics import (
    Permutation,
    PermutationException,
    adjacent_transpositions,
    all_permutations,
    bipartitions,
    cycle_type_representatives,
    double_factorial,
    label_range,
    monotone_map,
    ordered_splittings,
    set_partitions,
)


def test_then_applies_left_factor_first():
    tau = Permutation.transposition(1, 2)
    sigma = Permutation.transposition(2, 3)
    product = tau * sigma
    assert product(1) == 3
    assert product(2) == 1
    assert product(3) == 2
    assert product == Permutation.from_cycles((1, 3, 2))


def test_fixed_points_are_not_stored():
    assert Permutation({1: 1, 2: 3, 3: 2}) == Permutation.transposition(2, 3)
    assert Permutation.from_cycles((4,)).is_identity


@pytest.mark.parametrize(
    "mapping",
    [
        {1: 2, 2: 2},
        {1: 2, 3: 1},
    ],
)
def test_non_bijections_are_rejected(mapping):
    with pytest.raises(PermutationException):
        Permutation(mapping)


def test_overlapping_cycles_are_rejected():
    with pytest.raises(PermutationException):
        Permutation.from_cycles((1, 2), (2, 3))


@pytest.mark.parametrize(
    "cycles, labels, cycle_type",
    [
        (((1, 2, 3),), label_range(4), (3, 1)),
        (((1, 2), (3, 4)), label_range(4), (2, 2)),
        ((), label_range(3), (1, 1, 1)),
    ],
)
def test_cycle_type(cycles, labels, cycle_type):
    assert Permutation.from_cycles(*cycles).cycle_type(labels) == cycle_type


def test_cycle_type_outside_labels():
    with pytest.raises(PermutationException):
        Permutation.transposition(1, 5).cycle_type(label_range(3))


def test_all_permutations():
    permutations = all_permutations(label_range(3))
    assert len(permutations) == 6
    assert len(set(permutations)) == 6
    assert permutations[0].is_identity


def test_adjacent_transpositions():
    assert adjacent_transpositions({2, 5, 7}) == [
        Permutation.transposition(2, 5),
        Permutation.transposition(5, 7),
    ]


def test_cycle_type_representatives():
    representatives = cycle_type_representatives(label_range(4))
    assert [cycle_type for cycle_type, _ in representatives] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    for cycle_type, sigma in representatives:
        assert sigma.cycle_type(label_range(4)) == cycle_type
    assert representatives[2][1] == Permutation.from_cycles((1, 2), (3, 4))


@pytest.mark.parametrize(
    "n, blocks, count",
    [
        (4, 2, 7),
        (4, 3, 6),
        (5, 2, 15),
        (3, 4, 0),
        (3, 0, 0),
    ],
)
def test_set_partitions_count(n, blocks, count):
    assert len(set_partitions(label_range(n), blocks)) == count


def test_ordered_splittings_cover_labels():
    splittings = ordered_splittings(label_range(3), 3)
    assert len(splittings) == 6
    for splitting in splittings:
        assert frozenset().union(*splitting) == label_range(3)


def test_bipartitions_start_with_least_label():
    for left, right in bipartitions({3, 4, 8}):
        assert 3 in left
        assert not left & right


@pytest.mark.parametrize(
    "n, value",
    [(-1, 1), (1, 1), (5, 15), (7, 105)],
)
def test_double_factorial(n, value):
    assert double_factorial(n) == value


def test_monotone_map():
    assert monotone_map({5, 3}, {9, 1}) == {3: 1, 5: 9}
    with pytest.raises(PermutationException):
        monotone_map({1, 2}, {1})


@given(st.permutations(list(range(1, 7))))
def test_inverse_cancels(image):
    sigma = Permutation(zip(range(1, 7), image))
    assert (sigma * sigma.inverse()).is_identity
    assert (sigma.inverse() * sigma).is_identity


@given(
    st.permutations(list(range(1, 6))),
    st.permutations(list(range(1, 6))),
)
def test_product_is_composition(first, second):
    tau = Permutation(zip(range(1, 6), first))
    sigma = Permutation(zip(range(1, 6), second))
    for label in range(1, 6):
        assert (tau * sigma)(label) == sigma(tau(label))
