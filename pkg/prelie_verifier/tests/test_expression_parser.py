# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import pytest

from prelie_verifier.expression_parser import (
    TreeExpressionException,
    parse_raw_tree,
    parse_tree,
    parse_vector,
)
from prelie_verifier.free_operad import (
    LIE_SIGNATURE,
    TWO_GENERATOR_SIGNATURE,
    TreeTensor,
    tensor_vector,
)


@pytest.mark.parametrize(
    "text, raw",
    [
        ("7", 7),
        ("[2,1]", ("bracket", 2, 1)),
        (" { [1 , 2] , 3 } ", ("bullet", ("bracket", 1, 2), 3)),
        ("(1<(2<3))", ("prelie", 1, ("prelie", 2, 3))),
        ("[10,2]", ("bracket", 10, 2)),
    ],
)
def test_parse_raw_tree(text, raw):
    assert parse_raw_tree(text) == raw


def test_parse_tree_reports_sign():
    tensor, sign = parse_tree("[2,1]")
    assert tensor == TreeTensor(("bracket", 1, 2))
    assert sign == -1


def test_parse_vector_coefficients():
    vector = parse_vector("1/3 [[1,2],3] - 2*{1,[2,3]} + [1,[3,2]]")
    assert vector.coefficient(
        TreeTensor(("bracket", ("bracket", 1, 2), 3))
    ) == Fraction(1, 3)
    assert vector.coefficient(
        TreeTensor(("bullet", 1, ("bracket", 2, 3)))
    ) == -2
    assert vector.coefficient(
        TreeTensor(("bracket", 1, ("bracket", 2, 3)))
    ) == -1


def test_parse_vector_cancels_terms():
    assert parse_vector("[1,2] + [2,1]").is_zero()
    assert parse_vector("{1,2} - {2,1}").is_zero()


def test_unicode_minus():
    assert parse_vector("−[1,2]") == tensor_vector(("bracket", 2, 1))


@pytest.mark.parametrize(
    "text",
    [
        "[1,2",
        "[1,1]",
        "[1,2] + [1,3]",
        "1/0 [1,2]",
        "[1;2]",
        "",
    ],
)
def test_invalid_expressions(text):
    with pytest.raises(TreeExpressionException):
        parse_vector(text)


def test_signature_is_enforced():
    with pytest.raises(TreeExpressionException):
        parse_tree("{[1,2],3}", LIE_SIGNATURE)
    with pytest.raises(TreeExpressionException):
        parse_vector("(1<2)", TWO_GENERATOR_SIGNATURE)
    assert parse_vector("{[1,2],3}", TWO_GENERATOR_SIGNATURE)
