# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelie_verifier.combinatorics import (
    Permutation,
    all_permutations,
    label_range,
)
from prelie_verifier.exact_linalg import (
    InexactScalarException,
    MixedArityException,
    Span,
    SpanStabilityException,
    SpeciesVector,
    exact,
    span_character,
    span_dim,
    span_insert,
    span_of,
)
from prelie_verifier.prelie_trees import (
    RootedTree,
    enumerate_rooted_trees,
    parse_rooted_tree,
    y_span,
)

VECTORS = [
    SpeciesVector.basis(tree)
    for tree in enumerate_rooted_trees(label_range(3))
]

coefficients = st.lists(
    st.integers(min_value=-3, max_value=3), min_size=9, max_size=9
)


def combination(vectors, values) -> SpeciesVector:
    return SpeciesVector.sum(
        label_range(3), [v * c for v, c in zip(vectors, values)]
    )


@pytest.mark.parametrize("value", [0.5, True, "1", None])
def test_inexact_scalars_are_rejected(value):
    with pytest.raises(InexactScalarException):
        exact(value)


def test_integral_fractions_are_demoted():
    assert type(exact(Fraction(4, 2))) is int
    assert exact(Fraction(2, 4)) == Fraction(1, 2)


def test_zero_coefficients_are_dropped(arity_three_trees):
    vector = SpeciesVector(
        label_range(3), {arity_three_trees[0]: 0, arity_three_trees[1]: 2}
    )
    assert len(vector) == 1
    assert (vector - vector).is_zero()


def test_mixed_components_are_rejected(arity_three_trees):
    with pytest.raises(MixedArityException):
        SpeciesVector(label_range(2), {arity_three_trees[0]: 1})
    edge = SpeciesVector.basis(RootedTree.from_parents(1, {2: 1}))
    with pytest.raises(MixedArityException):
        edge + SpeciesVector.basis(arity_three_trees[0])


def test_vector_arithmetic(arity_three_vectors):
    x, y = arity_three_vectors[:2]
    assert (x * 2 - y) + y == x + x
    assert (x / 3) * 3 == x
    assert -(x - y) == y - x
    assert (x * Fraction(1, 2)).coefficient(x.leading_key()) == Fraction(
        1, 2
    )


def test_relabel_moves_component():
    tree = parse_rooted_tree("1(2,3)")
    shift = {1: 4, 2: 5, 3: 6}
    image = SpeciesVector.basis(tree).relabel(shift.__getitem__)
    assert image.component == frozenset({4, 5, 6})
    assert image == SpeciesVector.basis(parse_rooted_tree("4(5,6)"))


def test_span_pivots_are_least_keys(arity_three_vectors):
    x, y, z = arity_three_vectors[:3]
    span = span_of(label_range(3), [y + z, x + y, x - z])
    assert span.dim == 2
    for pivot, row in span.rows.items():
        assert row.leading_key() == pivot
        assert row.coefficient(pivot) == 1
    assert span.contains((y + z) * 3 - (x + y) * 2)


def test_insert_returns_residue(arity_three_vectors):
    x, y = arity_three_vectors[:2]
    span, residue = Span(label_range(3)).insert(x + y)
    assert residue == x + y
    same, residue = span.insert((x + y) * 5)
    assert same is span
    assert residue.is_zero()


def test_stop_at_dim(arity_three_vectors):
    span = Span(label_range(3)).extend(arity_three_vectors, stop_at_dim=4)
    assert span.dim == 4


def test_character_of_full_space(arity_three_vectors):
    span = span_of(label_range(3), arity_three_vectors)
    assert span.character(Permutation.identity()) == 9
    # trees fixed by (1 2): 3(1,2) only
    assert span_character(span, Permutation.transposition(1, 2)) == 1


def test_character_of_unstable_span():
    span = span_of(
        label_range(2),
        [SpeciesVector.basis(RootedTree.from_parents(1, {2: 1}))],
    )
    sigma = Permutation.transposition(1, 2)
    assert not span.is_stable(sigma)
    with pytest.raises(SpanStabilityException):
        span.character(sigma)


def test_quotient_character(arity_three_trees):
    sigma = Permutation.transposition(1, 2)
    x = SpeciesVector.basis(parse_rooted_tree("1(2,3)"))
    y = SpeciesVector.basis(parse_rooted_tree("2(1,3)"))
    span = span_of(label_range(3), [x + y])
    assert span.is_stable(sigma)
    assert span.character(sigma) == 1
    assert span.quotient_character(sigma, arity_three_trees) == 0


@given(coefficients, coefficients)
def test_express_reconstructs(first, second):
    span = span_of(
        label_range(3),
        [
            combination(VECTORS, first),
            combination(VECTORS, second),
        ],
    )
    target = combination(VECTORS, [a - b for a, b in zip(first, second)])
    coordinates, residue = span.express(target)
    assert residue.is_zero()
    rebuilt = SpeciesVector.sum(
        label_range(3),
        [span.rows[pivot] * value for pivot, value in coordinates.items()],
    )
    assert rebuilt == target


@given(coefficients)
def test_reduce_is_canonical(values):
    vector = combination(VECTORS, values)
    span = span_of(label_range(3), VECTORS[:4])
    residue = span.reduce(vector)
    assert not set(residue.keys()) & set(span.rows)
    assert span.reduce(residue) == residue
    assert span.contains(vector - residue)


def matrix_product(first: list, second: list) -> list:
    return [
        [
            sum(row[k] * second[k][j] for k in range(len(second)))
            for j in range(len(second[0]))
        ]
        for row in first
    ]


def test_restriction_matrix_of_stable_span():
    span = y_span(3)
    permutations = all_permutations(label_range(3))
    for sigma in permutations:
        matrix = span.restriction_matrix(sigma)
        assert len(matrix) == span.dim
        assert sum(matrix[i][i] for i in range(span.dim)) == (
            span.character(sigma)
        )
    identity = span.restriction_matrix(Permutation.identity())
    assert identity == [
        [int(i == j) for j in range(span.dim)] for i in range(span.dim)
    ]


def test_restriction_matrices_compose():
    span = y_span(3)
    permutations = all_permutations(label_range(3))
    for tau in permutations:
        for sigma in permutations:
            product = matrix_product(
                span.restriction_matrix(tau), span.restriction_matrix(sigma)
            )
            assert span.restriction_matrix(tau * sigma) == product
            assert span.character(tau * sigma) == sum(
                product[i][i] for i in range(span.dim)
            )


def test_restriction_matrix_of_unstable_span():
    span = span_of(
        label_range(2),
        [SpeciesVector.basis(RootedTree.from_parents(1, {2: 1}))],
    )
    with pytest.raises(SpanStabilityException):
        span.restriction_matrix(Permutation.transposition(1, 2))


def test_span_insert_and_dim(arity_three_vectors):
    x, y, z = arity_three_vectors[:3]
    span = Span(label_range(3))
    assert span_dim(span) == 0
    span, residue = span_insert(span, x - y)
    assert residue == x - y
    span, residue = span_insert(span, y - z)
    span, residue = span_insert(span, x - z)
    assert residue.is_zero()
    assert span_dim(span) == 2


@given(
    st.lists(coefficients, min_size=4, max_size=4),
    st.permutations(range(4)),
    coefficients,
)
def test_span_is_independent_of_insertion_order(values, order, other):
    vectors = [combination(VECTORS, value) for value in values]
    inserted = Span(label_range(3))
    for vector in vectors:
        inserted, _ = span_insert(inserted, vector)
    shuffled = span_of(label_range(3), [vectors[i] for i in order])
    assert span_dim(inserted) == span_dim(shuffled)
    assert set(inserted.rows) == set(shuffled.rows)
    assert all(shuffled.contains(vector) for vector in vectors)
    target = combination(VECTORS, other)
    assert inserted.reduce(target) == shuffled.reduce(target)
