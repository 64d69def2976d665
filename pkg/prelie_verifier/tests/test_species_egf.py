# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prelie_verifier.combinatorics import double_factorial
from prelie_verifier.species_egf import (
    EGFSeries,
    SeriesException,
    free_operad_series,
    partition_composition_dimension,
    verify_chapoton_identity,
)

ORDER = 5

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=6)
series = st.lists(fractions, min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda coeffs: EGFSeries(ORDER, coeffs)
)
without_constant = st.lists(fractions, min_size=ORDER, max_size=ORDER).map(
    lambda coeffs: EGFSeries(ORDER, [0] + coeffs)
)
generators = st.lists(
    st.integers(min_value=0, max_value=4),
    min_size=ORDER - 1,
    max_size=ORDER - 1,
).map(
    lambda dims: EGFSeries.from_dimensions(dict(enumerate(dims, 2)), ORDER)
)


def cyclic_lie_dimensions(order: int) -> dict:
    return {n: factorial(n - 2) for n in range(2, order + 1)}


def test_coefficients_are_exact():
    result = EGFSeries(2, [0, 1, 2])
    assert result.coeffs == (Fraction(0), Fraction(1), Fraction(2))
    with pytest.raises(SeriesException):
        EGFSeries(3, [0, 1])


def test_dimensions():
    assert EGFSeries.lie_series(5).dimensions() == [0, 1, 1, 2, 6, 24]
    assert EGFSeries.from_dimensions({2: 3}, 3).coefficient(2) == Fraction(
        3, 2
    )
    assert EGFSeries.from_dimensions({2: 3}, 3).coefficient(7) == 0


def test_mismatched_orders():
    with pytest.raises(SeriesException):
        EGFSeries.identity(3) + EGFSeries.identity(4)


def test_power_and_composition():
    x = EGFSeries.identity(4)
    assert (x + x.power(2)).power(2).coeffs == (0, 0, 1, 2, 1)
    assert EGFSeries.lie_series(4).compose(x) == EGFSeries.lie_series(4)
    with pytest.raises(SeriesException):
        x.compose(EGFSeries.constant(4, 1))
    with pytest.raises(SeriesException):
        x.power(-1)


def test_free_operad_on_cyclic_lie():
    tree_series = free_operad_series(
        EGFSeries.from_dimensions(cyclic_lie_dimensions(4), 4)
    )
    assert tree_series.coeffs == (
        0,
        1,
        Fraction(1, 2),
        Fraction(2, 3),
        Fraction(9, 8),
    )
    assert tree_series.dimensions() == [0, 1, 1, 4, 27]


def test_lie_composed_with_free_operad():
    free = free_operad_series(
        EGFSeries.from_dimensions(cyclic_lie_dimensions(4), 4)
    )
    composed = EGFSeries.lie_series(4).compose(free)
    assert composed.coeffs == (
        0,
        1,
        1,
        Fraction(3, 2),
        Fraction(8, 3),
    )


@pytest.mark.parametrize("order", [1, 4, 8])
def test_identity_with_cyclic_lie(order):
    table = verify_chapoton_identity(order, cyclic_lie_dimensions(order))
    assert table.holds
    assert [row.expected for row in table.rows] == [
        n ** (n - 1) for n in range(1, order + 1)
    ]
    assert not any(row.extrapolated for row in table.rows)


def test_identity_marks_extrapolated_rows():
    table = verify_chapoton_identity(6, {2: 1, 3: 1, 4: 2})
    assert table.holds
    assert [row.extrapolated for row in table.rows] == [
        False,
        False,
        False,
        False,
        True,
        True,
    ]


def test_identity_detects_wrong_dimensions():
    table = verify_chapoton_identity(4, {2: 1, 3: 3, 4: 2})
    assert not table.holds
    assert [row.match for row in table.rows] == [True, True, False, False]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_free_operad_on_one_symmetric_generator(n):
    free = free_operad_series(EGFSeries.from_dimensions({2: 1}, 6))
    assert free.dimensions()[n] == double_factorial(2 * n - 3)


def test_generators_need_arity_two():
    with pytest.raises(SeriesException):
        free_operad_series(EGFSeries.identity(3))


@pytest.mark.parametrize("n, dimension", [(1, 1), (2, 2), (3, 9)])
def test_partition_composition(n, dimension):
    lie = {k: factorial(k - 1) for k in range(1, 4)}
    trees = {1: 1, 2: 1, 3: 4}
    assert partition_composition_dimension(lie, trees, n) == dimension


@given(series, series)
def test_product_commutes(first, second):
    assert first * second == second * first


@given(series, series, series)
def test_product_distributes(first, second, third):
    assert first * (second + third) == first * second + first * third


@given(series)
def test_composition_with_identity(first):
    assert first.compose(EGFSeries.identity(ORDER)) == first


@settings(max_examples=50, deadline=None)
@given(series, without_constant, without_constant)
def test_composition_is_associative(first, second, third):
    assert first.compose(second.compose(third)) == (
        first.compose(second).compose(third)
    )


@given(generators)
def test_free_operad_series_is_fixed_point(generating):
    free = free_operad_series(generating)
    assert free == EGFSeries.identity(ORDER) + generating.compose(free)


def test_identity_with_computed_cyclic_lie():
    table = verify_chapoton_identity(6)
    assert table.holds
    assert [row.extrapolated for row in table.rows] == [
        False,
        False,
        False,
        False,
        False,
        True,
    ]
    assert table == verify_chapoton_identity(6, {2: 1, 3: 1, 4: 2, 5: 6})
