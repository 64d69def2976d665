# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Parser of tree expressions and of their rational combinations.

Grammar (whitespace-insensitive)::

    tree := leaf | "[" tree "," tree "]" | "{" tree "," tree "}"
          | "(" tree "<" tree ")"
    leaf := decimal positive integer
    term := [coefficient ["*"]] tree
    expression := ["+" | "-"] term (("+" | "-") term)*

A coefficient is an integer or a fraction ``p/q`` and has to be
followed by an opening delimiter or ``*``, so a bare number is a leaf.
The Unicode minus sign is accepted as well.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import pyparsing as pp

from prelie_verifier.exact_linalg import MixedArityException, SpeciesVector
from prelie_verifier.free_operad import (
    ALL_GENERATORS_SIGNATURE,
    KNOWN_GENERATORS,
    Generator,
    RawTree,
    Signature,
    TreeTensor,
    TreeTensorException,
    canonicalize,
)


class TreeExpressionException(Exception):
    """
    Is raised when a tree expression cannot be parsed or violates
    the declared signature.
    """

    pass


def _vertex(tree: pp.Forward, generator: Generator) -> pp.ParserElement:
    expression = (
        pp.Suppress(generator.opening)
        + tree
        + pp.Suppress(generator.separator)
        + tree
        + pp.Suppress(generator.closing)
    )
    return expression.set_parse_action(
        lambda tokens: [(generator.name, tokens[0], tokens[1])]
    )


def _fraction(tokens: pp.ParseResults) -> Fraction:
    try:
        return Fraction(tokens[0])
    except ZeroDivisionError:
        raise pp.ParseFatalException(f"Zero denominator in {tokens[0]}")


@lru_cache(maxsize=None)
def _grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    tree = pp.Forward()
    leaf = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))
    alternatives = [leaf] + [
        _vertex(tree, generator) for generator in KNOWN_GENERATORS.values()
    ]
    tree <<= pp.MatchFirst(alternatives)

    openings = " ".join(g.opening for g in KNOWN_GENERATORS.values())
    number = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(_fraction)
    coefficient = (
        number
        + pp.FollowedBy(pp.one_of(f"* {openings}"))
        + pp.Suppress(pp.Optional("*"))
    )
    minus = (pp.Literal("-") | pp.Literal("−")).set_parse_action(
        lambda: "-"
    )
    sign = pp.Literal("+") | minus
    first = pp.Group(
        pp.Optional(sign, default="+")
        + pp.Optional(coefficient, default=Fraction(1))
        + tree
    )
    other = pp.Group(
        sign + pp.Optional(coefficient, default=Fraction(1)) + tree
    )
    return tree, first + pp.ZeroOrMore(other)


def parse_raw_tree(text: str) -> RawTree:
    """
    Parses a single tree without canonicalizing it.

    Parameters
    ----------
    text : str
        Tree expression

    Returns
    -------
    RawTree :
        Leaf label or nested ``(generator_name, left, right)`` tuples

    Raises
    ------
    TreeExpressionException :
        Raised when the text does not follow the grammar
    """
    tree, _ = _grammar()
    try:
        return tree.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as ex:
        raise TreeExpressionException(f"Invalid tree {text!r}: {ex}")


def parse_tree(
    text: str, signature: Signature = ALL_GENERATORS_SIGNATURE
) -> Tuple[TreeTensor, int]:
    """
    Parses a single tree and canonicalizes it.

    Parameters
    ----------
    text : str
        Tree expression
    signature : Signature
        Generators allowed in the expression

    Returns
    -------
    Tuple[TreeTensor, int] :
        Canonical tensor and the sign relating the expression to it

    Raises
    ------
    TreeExpressionException :
        Raised for syntax errors, repeated labels and generators outside
        of the signature
    """
    raw = parse_raw_tree(text)
    try:
        return canonicalize(raw, signature)
    except TreeTensorException as ex:
        raise TreeExpressionException(f"Invalid tree {text!r}: {ex}")


def parse_vector(
    text: str, signature: Signature = ALL_GENERATORS_SIGNATURE
) -> SpeciesVector:
    """
    Parses a rational combination of trees on one label set.

    Parameters
    ----------
    text : str
        Expression such as ``"1/3 [[1,2],3] - {1,[2,3]}"``
    signature : Signature
        Generators allowed in the expression

    Returns
    -------
    SpeciesVector :
        Combination of canonical tree tensors

    Raises
    ------
    TreeExpressionException :
        Raised for syntax errors, signature violations and terms on
        different label sets
    """
    _, expression = _grammar()
    try:
        terms = expression.parse_string(text, parse_all=True)
    except pp.ParseBaseException as ex:
        raise TreeExpressionException(f"Invalid expression {text!r}: {ex}")
    total = None
    for sign, coefficient, raw in terms:
        try:
            tensor, tensor_sign = canonicalize(raw, signature)
        except TreeTensorException as ex:
            raise TreeExpressionException(
                f"Invalid term in {text!r}: {ex}"
            )
        factor = coefficient * tensor_sign * (-1 if sign == "-" else 1)
        term = SpeciesVector.basis(tensor, factor)
        try:
            total = term if total is None else total + term
        except MixedArityException as ex:
            raise TreeExpressionException(
                f"Terms of {text!r} live on different label sets: {ex}"
            )
    return total
