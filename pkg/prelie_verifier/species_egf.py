# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Truncated exponential generating functions of species.

A species with components of dimension ``d(n)`` has the series
``sum d(n) x^n / n!``. Composition of species corresponds to substitution
of series, the free operad on a species ``C`` concentrated in arities at
least two has the series ``t`` solving ``t = x + C(t)``.
"""

import logging
from fractions import Fraction
from math import factorial, prod
from typing import List, Mapping, Optional, Union

import attrs

from prelie_verifier.combinatorics import label_range, set_partitions
from prelie_verifier.cyclic_lie import cl_component

# largest arity of CL computed when no dimensions are given
CL_COMPUTED_ARITY = 5


class SeriesException(Exception):
    """
    Is raised when series of different orders are combined or when
    a substitution is not defined.
    """

    pass


def _coefficients(values) -> tuple:
    return tuple(Fraction(value) for value in values)


@attrs.frozen
class EGFSeries:
    """
    Power series truncated after ``x^order``.

    Attributes
    ----------
    order : int
        Largest stored power
    coeffs : tuple
        Fractions ``c_0, ..., c_order``
    """

    order: int
    coeffs: tuple = attrs.field(converter=_coefficients)

    @coeffs.validator
    def _check_length(self, attribute, value):
        if len(value) != self.order + 1:
            raise SeriesException(
                f"Series of order {self.order} needs {self.order + 1} "
                f"coefficients, got {len(value)}"
            )

    @classmethod
    def zero(cls, order: int) -> "EGFSeries":
        return cls(order, [0] * (order + 1))

    @classmethod
    def constant(cls, order: int, value) -> "EGFSeries":
        return cls(order, [value] + [0] * order)

    @classmethod
    def identity(cls, order: int) -> "EGFSeries":
        """
        The series ``x`` of the singleton species.
        """
        coeffs = [0] * (order + 1)
        if order >= 1:
            coeffs[1] = 1
        return cls(order, coeffs)

    @classmethod
    def from_dimensions(
        cls, dimensions: Mapping[int, int], order: int
    ) -> "EGFSeries":
        """
        Builds ``sum d(n) x^n / n!``, absent arities counting as zero.

        Parameters
        ----------
        dimensions : Mapping[int, int]
            Dimension of each component by arity
        order : int
            Truncation order

        Returns
        -------
        EGFSeries :
            The exponential generating function
        """
        return cls(
            order,
            [
                Fraction(dimensions.get(n, 0), factorial(n))
                for n in range(order + 1)
            ],
        )

    @classmethod
    def lie_series(cls, order: int) -> "EGFSeries":
        """
        Series ``sum (n - 1)! x^n / n!`` of the Lie operad.
        """
        return cls(
            order, [0] + [Fraction(1, n) for n in range(1, order + 1)]
        )

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n] if n <= self.order else Fraction(0)

    def dimensions(self) -> List[Union[int, Fraction]]:
        """
        Returns ``n! c_n`` for ``n = 0..order``, integers when integral.
        """
        result = []
        for n, value in enumerate(self.coeffs):
            dimension = value * factorial(n)
            result.append(
                dimension.numerator
                if dimension.denominator == 1
                else dimension
            )
        return result

    def _same_order(self, other: "EGFSeries"):
        if self.order != other.order:
            raise SeriesException(
                f"Series of orders {self.order} and {other.order} "
                "cannot be combined"
            )

    def __add__(self, other: "EGFSeries") -> "EGFSeries":
        self._same_order(other)
        return EGFSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "EGFSeries") -> "EGFSeries":
        self._same_order(other)
        return EGFSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "EGFSeries":
        return EGFSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other) -> "EGFSeries":
        if isinstance(other, (int, Fraction)):
            return EGFSeries(self.order, [a * other for a in self.coeffs])
        self._same_order(other)
        result = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order - i + 1):
                result[i + j] += a * other.coeffs[j]
        return EGFSeries(self.order, result)

    __rmul__ = __mul__

    def power(self, exponent: int) -> "EGFSeries":
        """
        Returns the ``exponent``-th power, the constant one for zero.
        """
        if exponent < 0:
            raise SeriesException("Negative powers are not supported")
        result = EGFSeries.constant(self.order, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def compose(self, inner: "EGFSeries") -> "EGFSeries":
        """
        Substitutes ``inner`` into the series.

        Parameters
        ----------
        inner : EGFSeries
            Series without constant term

        Returns
        -------
        EGFSeries :
            Coefficients of ``self(inner(x))`` up to the common order

        Raises
        ------
        SeriesException :
            Raised when ``inner`` has a constant term or the orders differ
        """
        self._same_order(inner)
        if inner.coeffs[0]:
            raise SeriesException(
                "Cannot substitute a series with a constant term"
            )
        result = EGFSeries.constant(self.order, self.coeffs[-1])
        for value in reversed(self.coeffs[:-1]):
            result = result * inner + EGFSeries.constant(self.order, value)
        return result

    def __str__(self) -> str:
        terms = [
            f"{value}*x^{n}" for n, value in enumerate(self.coeffs) if value
        ]
        return " + ".join(terms) if terms else "0"


def free_operad_series(generators: EGFSeries) -> EGFSeries:
    """
    Series of the free operad on a species of generators.

    Parameters
    ----------
    generators : EGFSeries
        Series of the generating species, supported in orders at least 2

    Returns
    -------
    EGFSeries :
        The unique ``t`` with ``t = x + generators(t)``

    Raises
    ------
    SeriesException :
        Raised when the generators have terms of order below 2
    """
    if generators.coeffs[0] or generators.coefficient(1):
        raise SeriesException(
            "Generators of a free operad must live in arities at least 2"
        )
    x = EGFSeries.identity(generators.order)
    series = x
    # every substitution fixes at least one more coefficient
    for _ in range(generators.order):
        series = x + generators.compose(series)
    return series


def partition_composition_dimension(
    outer: Mapping[int, int], inner: Mapping[int, int], n: int
) -> int:
    """
    Dimension of the arity-``n`` component of a composition of species,
    summed over the set partitions of ``1..n``.
    """
    labels = label_range(n)
    return sum(
        outer.get(blocks, 0)
        * prod(
            inner.get(len(block), 0)
            for block in partition
        )
        for blocks in range(1, n + 1)
        for partition in set_partitions(labels, blocks)
    )


@attrs.frozen
class IdentityRow:
    """
    One arity of the comparison of ``Lie(T(CL))`` with the rooted trees.
    """

    n: int
    expected: int
    actual: Union[int, Fraction]
    extrapolated: bool

    @property
    def match(self) -> bool:
        return self.expected == self.actual


@attrs.frozen
class IdentityTable:
    """
    Coefficient table of the generating function identity.
    """

    rows: tuple = attrs.field(converter=tuple)

    @property
    def holds(self) -> bool:
        return all(row.match for row in self.rows)


def verify_chapoton_identity(
    order: int, cl_dimensions: Optional[Mapping[int, int]] = None
) -> IdentityTable:
    """
    Compares the dimensions of ``Lie o T(CL)`` with ``n^(n - 1)``.

    Arities of CL missing from ``cl_dimensions`` use the pattern
    ``(n - 2)!``, and every row depending on such an arity is marked as
    extrapolated.

    Parameters
    ----------
    order : int
        Largest arity compared
    cl_dimensions : Optional[Mapping[int, int]]
        Computed dimensions of CL by arity, computed with `cl_component`
        up to `CL_COMPUTED_ARITY` when None

    Returns
    -------
    IdentityTable :
        One row per arity ``1..order``
    """
    if cl_dimensions is None:
        cl_dimensions = {
            n: cl_component(n).dim
            for n in range(2, min(order, CL_COMPUTED_ARITY) + 1)
        }
    dimensions = {}
    first_extrapolated = order + 1
    for n in range(2, order + 1):
        if n in cl_dimensions:
            dimensions[n] = cl_dimensions[n]
        else:
            dimensions[n] = factorial(n - 2)
            first_extrapolated = min(first_extrapolated, n)
    cyclic = EGFSeries.from_dimensions(dimensions, order)
    series = EGFSeries.lie_series(order).compose(free_operad_series(cyclic))
    actual = series.dimensions()
    rows = [
        IdentityRow(n, n ** (n - 1), actual[n], n >= first_extrapolated)
        for n in range(1, order + 1)
    ]
    logging.info(
        f"Series identity up to order {order}, CL extrapolated from arity "
        f"{first_extrapolated}"
    )
    return IdentityTable(rows)
