# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
The species CL of cyclic Lie elements.

CL is the right Lie-module generated by one symmetric binary form
``(a1, a2) = (a2, a1)`` subject to ``([a1, a2], a3) = (a1, [a2, a3])``.
Its component on a label set is built here as an explicit quotient: the
ambient space has one basis symbol ``(l, l')`` per splitting of the labels
into two blocks and per pair of left-normed Lie monomials on the blocks,
the relations are all instances of the invariance identity with Lie
monomials on ordered splittings into three blocks.

Both sides of the identity are bilinear in their arguments, so instances
with arbitrary Lie elements are combinations of the instances built here.
"""

import logging
from functools import lru_cache
from typing import Tuple

import attrs

from prelie_verifier.combinatorics import (
    LabelMap,
    Permutation,
    adjacent_transpositions,
    bipartitions,
    label_range,
    monotone_map,
    ordered_splittings,
)
from prelie_verifier.exact_linalg import (
    BasisKey,
    Scalar,
    Span,
    SpeciesVector,
    exact,
)
from prelie_verifier.free_operad import (
    BRACKET,
    LIE_SIGNATURE,
    RawTree,
    TreeTensor,
    canonicalize,
    left_normed_combs,
)
from prelie_verifier.operad_quotient import (
    LIE_PRESENTATION,
    ideal_component,
)


class CyclicLieException(Exception):
    """
    Is raised when a component of CL is requested below arity two or
    a bracket expression cannot be rewritten in the Lie basis.
    """

    pass


def _comb_node(word: tuple) -> RawTree:
    node = word[0]
    for label in word[1:]:
        node = (BRACKET.name, node, label)
    return node


@attrs.frozen(cache_hash=True)
class LieBasisIndex(BasisKey):
    """
    Left-normed Lie monomial ``[[...[w1, w2], ...], wk]`` with ``w1`` the
    least label of the word.
    """

    word: tuple = attrs.field(converter=tuple)
    labels: frozenset = attrs.field(init=False, eq=False, repr=False)
    sort_key: tuple = attrs.field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        if not self.word or self.word[0] != min(self.word):
            raise CyclicLieException(
                f"Word {self.word} does not start with its least label"
            )
        object.__setattr__(self, "labels", frozenset(self.word))
        object.__setattr__(
            self, "sort_key", (1, str(TreeTensor(self.node)))
        )

    @property
    def node(self) -> RawTree:
        return _comb_node(self.word)

    def __str__(self) -> str:
        return self.sort_key[1]

    def act(self, label_map: LabelMap) -> Tuple["LieBasisIndex", int]:
        """
        Relabels the word; only maps keeping the first letter least are
        supported, as monotone maps between blocks do.
        """
        return LieBasisIndex(tuple(label_map(x) for x in self.word)), 1


def lie_basis_indices(labels: frozenset) -> list:
    """
    Indices of the left-normed Lie basis with the least label first.
    """
    return [
        LieBasisIndex(_word(comb.node)) for comb in left_normed_combs(labels)
    ]


def _word(node: RawTree) -> tuple:
    if isinstance(node, int):
        return (node,)
    return _word(node[1]) + (node[2],)


@lru_cache(maxsize=None)
def _rewriting_span(k: int) -> Span:
    """
    Jacobi ideal rows followed by ``comb + tag`` rows on ``1..k``.

    Reducing a bracket expression against it leaves minus its coordinates
    on the tag keys.
    """
    labels = label_range(k)
    span = Span(labels)
    if k >= 3:
        span = span.extend(ideal_component(LIE_PRESENTATION, k).span.basis())
    rows = [
        SpeciesVector(labels, {comb: 1, LieBasisIndex(_word(comb.node)): 1})
        for comb in left_normed_combs(labels)
    ]
    return span.extend(rows)


def lie_rewrite(vector: SpeciesVector) -> SpeciesVector:
    """
    Expands a combination of bracket trees in the left-normed Lie basis.

    Parameters
    ----------
    vector : SpeciesVector
        Combination of bracket-only tree tensors on one block

    Returns
    -------
    SpeciesVector :
        Combination of LieBasisIndex keys on the same block

    Raises
    ------
    CyclicLieException :
        Raised for tensors with other generators or when the reduction
        leaves tree keys behind
    """
    for tensor in vector.keys():
        if not isinstance(tensor, TreeTensor) or any(
            name != BRACKET.name for name in tensor.vertices()
        ):
            raise CyclicLieException(f"{tensor} is not a bracket tree")
    block = vector.component
    k = len(block)
    to_standard = monotone_map(block, label_range(k))
    back = monotone_map(label_range(k), block)
    residue = _rewriting_span(k).reduce(
        vector.relabel(to_standard.__getitem__)
    )
    if any(not isinstance(key, LieBasisIndex) for key in residue.keys()):
        raise CyclicLieException(
            f"Cannot express {vector} in the left-normed basis"
        )
    return (-residue).relabel(back.__getitem__)


@lru_cache(maxsize=None)
def _rewrite_node(node: RawTree) -> SpeciesVector:
    tensor, sign = canonicalize(node, LIE_SIGNATURE)
    return lie_rewrite(SpeciesVector.basis(tensor, sign))


def _bracket_indices(a: LieBasisIndex, b: LieBasisIndex) -> SpeciesVector:
    return _rewrite_node((BRACKET.name, a.node, b.node))


def lie_bracket_coordinates(
    x: SpeciesVector, y: SpeciesVector
) -> SpeciesVector:
    """
    Bracket of two Lie-basis combinations on disjoint blocks, in the
    Lie basis of the union.
    """
    component = x.component | y.component
    total = SpeciesVector.zero(component)
    for a, p in x.items():
        for b, q in y.items():
            total = total + _bracket_indices(a, b) * (p * q)
    return total


@attrs.frozen(cache_hash=True)
class FormSymbol(BasisKey):
    """
    Basis symbol ``(left, right)`` of the formal module, oriented so that
    ``left`` holds the least label.
    """

    left: LieBasisIndex
    right: LieBasisIndex
    labels: frozenset = attrs.field(init=False, eq=False, repr=False)
    sort_key: tuple = attrs.field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        if self.left.labels & self.right.labels:
            raise CyclicLieException(
                f"Arguments {self.left} and {self.right} share labels"
            )
        if min(self.right.labels) < min(self.left.labels):
            raise CyclicLieException(
                f"Symbol ({self.left},{self.right}) is not oriented"
            )
        object.__setattr__(
            self, "labels", self.left.labels | self.right.labels
        )
        object.__setattr__(
            self, "sort_key", (3, f"({self.left},{self.right})")
        )

    @classmethod
    def oriented(cls, a: LieBasisIndex, b: LieBasisIndex) -> "FormSymbol":
        if min(b.labels) < min(a.labels):
            a, b = b, a
        return cls(a, b)

    def __str__(self) -> str:
        return self.sort_key[1]


def form(x: SpeciesVector, y: SpeciesVector) -> SpeciesVector:
    """
    Bilinear symmetric form of two Lie-basis combinations.
    """
    terms = {}
    for a, p in x.items():
        for b, q in y.items():
            symbol = FormSymbol.oriented(a, b)
            value = terms.get(symbol, 0) + p * q
            if value:
                terms[symbol] = value
            else:
                del terms[symbol]
    return SpeciesVector(x.component | y.component, terms)


def act_forms(sigma: LabelMap, vector: SpeciesVector) -> SpeciesVector:
    """
    Action of a permutation on combinations of form symbols.

    Both arguments are relabelled and rewritten in the Lie basis.

    Parameters
    ----------
    sigma : LabelMap
        Permutation of the labels of the vector
    vector : SpeciesVector
        Combination of FormSymbol keys

    Returns
    -------
    SpeciesVector :
        Image combination of FormSymbol keys
    """
    component = frozenset(sigma(x) for x in vector.component)
    total = SpeciesVector.zero(component)
    for symbol, value in vector.items():
        left = _rewrite_node(_relabel_node(symbol.left.node, sigma))
        right = _rewrite_node(_relabel_node(symbol.right.node, sigma))
        total = total + form(left, right) * value
    return total


def _relabel_node(node: RawTree, sigma: LabelMap) -> RawTree:
    if isinstance(node, int):
        return sigma(node)
    return (node[0], _relabel_node(node[1], sigma), _relabel_node(
        node[2], sigma
    ))


@attrs.frozen
class CLComponent:
    """
    Component of CL as the formal module modulo its relations.

    Attributes
    ----------
    n : int
        Arity
    symbols : tuple
        FormSymbol basis of the formal module
    relation_span : Span
        Span of the invariance relations
    """

    n: int
    symbols: tuple = attrs.field(repr=False)
    relation_span: Span = attrs.field(repr=False)

    @property
    def ambient_dim(self) -> int:
        return len(self.symbols)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.relation_span.dim


def form_symbols(labels: frozenset) -> tuple:
    """
    Sorted oriented form symbols spanning the ambient space over ``labels``.
    """
    symbols = []
    for left, right in bipartitions(labels):
        for a in lie_basis_indices(left):
            for b in lie_basis_indices(right):
                symbols.append(FormSymbol.oriented(a, b))
    return tuple(sorted(symbols))


def invariance_relations(labels: frozenset) -> list:
    """
    Lists ``([l1, l2], l3) - (l1, [l2, l3])`` for Lie monomials on every
    ordered splitting of ``labels`` into three blocks.
    """
    relations = []
    for first, second, third in ordered_splittings(labels, 3):
        for a in lie_basis_indices(first):
            for b in lie_basis_indices(second):
                for c in lie_basis_indices(third):
                    x = SpeciesVector.basis(a)
                    z = SpeciesVector.basis(c)
                    relations.append(
                        form(_bracket_indices(a, b), z)
                        - form(x, _bracket_indices(b, c))
                    )
    return relations


@lru_cache(maxsize=None)
def cl_component(n: int) -> CLComponent:
    """
    Builds the arity-``n`` component of CL on ``1..n``.

    Parameters
    ----------
    n : int
        Arity, at least 2

    Returns
    -------
    CLComponent :
        Symbols and relation span of the component

    Raises
    ------
    CyclicLieException :
        Raised for arities below 2
    """
    if n < 2:
        raise CyclicLieException(f"CL has no component of arity {n}")
    labels = label_range(n)
    symbols = form_symbols(labels)
    relations = invariance_relations(labels)
    span = Span(labels).extend(relations)
    component = CLComponent(n, symbols, span)
    logging.info(
        f"CL({n}): {len(symbols)} symbols, {len(relations)} relations of "
        f"rank {span.dim}, dimension {component.dim}"
    )
    return component


def _ambient_trace(symbols: tuple, sigma: Permutation) -> Scalar:
    trace = 0
    for symbol in symbols:
        image = act_forms(sigma, SpeciesVector.basis(symbol))
        trace += image.coefficient(symbol)
    return exact(trace)


def cl_character(n: int, sigma: Permutation) -> Scalar:
    """
    Character of ``sigma`` on CL(n), the trace on the formal module minus
    the trace on the relation span.

    Parameters
    ----------
    n : int
        Arity, at least 2
    sigma : Permutation
        Permutation of ``1..n``

    Returns
    -------
    Scalar :
        The character value

    Raises
    ------
    SpanStabilityException :
        Raised when the relation span is not stable under ``sigma``
    """
    component = cl_component(n)
    return _ambient_trace(component.symbols, sigma) - (
        component.relation_span.character(sigma, act_forms)
    )


def cl_quotient_character(n: int, sigma: Permutation) -> Scalar:
    """
    Character of ``sigma`` on CL(n) read off the residues of the
    non-pivot symbols.
    """
    component = cl_component(n)
    return component.relation_span.quotient_character(
        sigma, component.symbols, act_forms
    )


def cl_relations_stable(n: int) -> bool:
    """
    Whether the invariance relations of arity ``n`` span a stable subspace.
    """
    component = cl_component(n)
    span = component.relation_span
    return all(
        span.is_stable(sigma, act_forms)
        for sigma in adjacent_transpositions(span.ambient)
    )
