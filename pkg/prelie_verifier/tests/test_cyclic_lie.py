# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prelie_verifier.combinatorics import Permutation, label_range
from prelie_verifier.cyclic_lie import (
    CyclicLieException,
    FormSymbol,
    LieBasisIndex,
    act_forms,
    cl_character,
    cl_component,
    cl_quotient_character,
    cl_relations_stable,
    form,
    form_symbols,
    invariance_relations,
    lie_basis_indices,
    lie_bracket_coordinates,
    lie_rewrite,
)
from prelie_verifier.exact_linalg import SpeciesVector
from prelie_verifier.expression_parser import parse_vector
from prelie_verifier.free_operad import tensor_vector
from prelie_verifier.prelie_trees import evaluate_text


def index(*word) -> SpeciesVector:
    return SpeciesVector.basis(LieBasisIndex(word))


def test_index_requires_least_first_letter():
    with pytest.raises(CyclicLieException):
        LieBasisIndex((2, 1))
    assert str(LieBasisIndex((1, 3, 2))) == "[[1,3],2]"


def test_lie_basis_indices():
    assert [i.word for i in lie_basis_indices(label_range(3))] == [
        (1, 2, 3),
        (1, 3, 2),
    ]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("[1,[2,3]]", [((1, 2, 3), 1), ((1, 3, 2), -1)]),
        ("[[2,3],1]", [((1, 2, 3), -1), ((1, 3, 2), 1)]),
        ("[[1,2],3] + [[1,3],2]", [((1, 2, 3), 1), ((1, 3, 2), 1)]),
        ("[4,[5,6]]", [((4, 5, 6), 1), ((4, 6, 5), -1)]),
        ("[2,1]", [((1, 2), -1)]),
    ],
)
def test_lie_rewrite(text, expected):
    result = lie_rewrite(parse_vector(text))
    assert len(result) == len(expected)
    for word, value in expected:
        assert result.coefficient(LieBasisIndex(word)) == value


def test_lie_rewrite_rejects_other_generators():
    with pytest.raises(CyclicLieException):
        lie_rewrite(parse_vector("{1,2}"))


def test_lie_bracket_coordinates():
    assert lie_bracket_coordinates(index(1), index(2)) == index(1, 2)
    assert lie_bracket_coordinates(index(2), index(1)) == -index(1, 2)
    assert lie_bracket_coordinates(index(1, 2), index(3)) == index(1, 2, 3)
    assert lie_bracket_coordinates(index(1), index(2, 3)) == (
        index(1, 2, 3) - index(1, 3, 2)
    )


def test_form_is_symmetric_and_oriented():
    x = index(2, 3)
    y = index(1)
    assert form(x, y) == form(y, x)
    (symbol,) = form(x, y).keys()
    assert symbol.left == LieBasisIndex((1,))
    with pytest.raises(CyclicLieException):
        FormSymbol(LieBasisIndex((2,)), LieBasisIndex((1,)))
    with pytest.raises(CyclicLieException):
        FormSymbol(LieBasisIndex((1, 2)), LieBasisIndex((2,)))


@pytest.mark.parametrize(
    "n, symbols, dimension",
    [
        (2, 1, 1),
        (3, 3, 1),
        (4, 11, 2),
    ],
)
def test_cl_dimensions(n, symbols, dimension):
    component = cl_component(n)
    assert component.ambient_dim == symbols
    assert len(form_symbols(label_range(n))) == symbols
    assert component.dim == dimension


def test_cl_below_arity_two():
    with pytest.raises(CyclicLieException):
        cl_component(1)


def test_invariance_relations_in_arity_three():
    relations = invariance_relations(label_range(3))
    assert len(relations) == 6
    assert all(relation.component == label_range(3) for relation in relations)


def test_action_on_forms():
    symbol = form(index(1, 2), index(3))
    image = act_forms(Permutation.transposition(1, 2), symbol)
    assert image == -symbol


@pytest.mark.parametrize(
    "sigma, value",
    [
        (Permutation.identity(), 1),
        (Permutation.transposition(1, 2), -1),
        (Permutation.from_cycles((1, 2, 3)), 1),
    ],
)
def test_cl_character_in_arity_three(sigma, value):
    assert cl_character(3, sigma) == value
    assert cl_quotient_character(3, sigma) == value


def test_cl_character_in_arity_two():
    assert cl_character(2, Permutation.transposition(1, 2)) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_relations_are_stable(n):
    assert cl_relations_stable(n)


def bracketing(labels: list, splits: list):
    if len(labels) == 1:
        return labels[0]
    cut = splits[0] % (len(labels) - 1) + 1
    rest = splits[1:]
    return (
        "bracket",
        bracketing(labels[:cut], rest),
        bracketing(labels[cut:], rest[::-1]),
    )


@settings(max_examples=50, deadline=None)
@given(
    st.permutations([1, 2, 3, 4, 5]),
    st.lists(st.integers(min_value=0, max_value=10), min_size=4, max_size=4),
)
def test_rewrite_preserves_evaluation(labels, splits):
    raw = bracketing(labels, splits)
    rewritten = lie_rewrite(tensor_vector(raw))
    assert all(isinstance(key, LieBasisIndex) for key in rewritten.keys())
    evaluated = SpeciesVector.sum(
        label_range(5),
        [evaluate_text(key.node) * value for key, value in rewritten.items()],
    )
    assert evaluated == evaluate_text(raw)
