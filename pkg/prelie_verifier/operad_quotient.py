# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Operadic ideals generated by relators of arity three and the quotients
of free operads by them.

For an operad generated in arity two the component ``I(n + 1)`` of the
ideal is spanned by the symmetric-group images of the compositions
``g o_i e(i, n + 1)`` and ``e(g, n + 1)`` of the rows ``g`` of ``I(n)``
with the generators ``e`` (both argument orders for generators without
symmetry). Since the compositions of an ``S_n``-stable span form an
``S_n``-stable family, the images under the transpositions
``(k, n + 1)`` suffice.
"""

import logging
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Tuple

import attrs

from prelie_verifier.combinatorics import (
    Permutation,
    adjacent_transpositions,
    all_permutations,
    label_range,
)
from prelie_verifier.exact_linalg import Span, SpeciesVector
from prelie_verifier.expression_parser import parse_vector
from prelie_verifier.free_operad import (
    LIE_SIGNATURE,
    PRE_LIE_SIGNATURE,
    TWO_GENERATOR_SIGNATURE,
    Signature,
    Symmetry,
    act,
    canonicalize,
    enumerate_basis,
)


class OperadQuotientException(Exception):
    """
    Is raised when an ideal component or a relator is malformed.
    """

    pass


def _nonzero_arity_three(instance, attribute, value: SpeciesVector):
    if value.is_zero():
        raise OperadQuotientException("A relator cannot be zero")
    if value.component != label_range(3):
        raise OperadQuotientException(
            f"Relator {value} is not an element on the labels 1, 2, 3"
        )


@attrs.frozen
class Relator:
    """
    Nonzero element of the arity-three component of a free operad.
    """

    element: SpeciesVector = attrs.field(validator=_nonzero_arity_three)
    name: str = attrs.field(default="", eq=False)

    @classmethod
    def parse(
        cls, text: str, signature: Signature, name: str = ""
    ) -> "Relator":
        return cls(parse_vector(text, signature), name or text)

    def __str__(self) -> str:
        return self.name or str(self.element)


@attrs.frozen
class Presentation:
    """
    Quotient of the free operad on ``signature`` by the ideal generated
    by ``relators``.
    """

    name: str
    signature: Signature
    relators: tuple = attrs.field(converter=tuple)


PRE_LIE_RELATOR = Relator.parse(
    "((1<2)<3) - (1<(2<3)) - ((1<3)<2) + (1<(3<2))",
    PRE_LIE_SIGNATURE,
    "pre-Lie identity",
)

JACOBI_RELATOR = Relator.parse(
    "[[1,2],3] + [[2,3],1] + [[3,1],2]",
    LIE_SIGNATURE,
    "Jacobi identity",
)

SYMMETRIZED_RELATOR = Relator.parse(
    "{{1,2},3} - {1,{2,3}} - {1,[2,3]} - {[1,2],3} - 2{[1,3],2}"
    " + [1,{2,3}] + [{1,2},3] + [[1,3],2]",
    TWO_GENERATOR_SIGNATURE,
    "bracket and symmetrized product identity",
)

PRE_LIE_PRESENTATION = Presentation(
    "pre-Lie", PRE_LIE_SIGNATURE, (PRE_LIE_RELATOR,)
)
TWO_GENERATOR_PRESENTATION = Presentation(
    "bracket and symmetrized product",
    TWO_GENERATOR_SIGNATURE,
    (JACOBI_RELATOR, SYMMETRIZED_RELATOR),
)
LIE_PRESENTATION = Presentation("Lie", LIE_SIGNATURE, (JACOBI_RELATOR,))

PRESENTATIONS = {
    presentation.name: presentation
    for presentation in (
        PRE_LIE_PRESENTATION,
        TWO_GENERATOR_PRESENTATION,
        LIE_PRESENTATION,
    )
}


@attrs.frozen
class IdealComponent:
    """
    Component of arity ``n`` of an operadic ideal.
    """

    presentation: Presentation
    n: int
    span: Span = attrs.field(repr=False)

    @property
    def dim(self) -> int:
        return self.span.dim

    def verify_stability(self) -> bool:
        """
        Checks that adjacent transpositions, hence all of ``S_n``, map
        the span into itself.
        """
        return all(
            self.span.is_stable(sigma, act)
            for sigma in adjacent_transpositions(self.span.ambient)
        )


def _orbit_vectors(element: SpeciesVector) -> list:
    return [
        act(sigma, element) for sigma in all_permutations(element.component)
    ]


def _map_raw(
    row: SpeciesVector, component: frozenset, transform: Callable
) -> SpeciesVector:
    terms = {}
    for tensor, value in row.items():
        image, sign = canonicalize(transform(tensor.node))
        terms[image] = terms.get(image, 0) + sign * value
    return SpeciesVector(component, terms)


def _compositions(
    presentation: Presentation, row: SpeciesVector, new: int
) -> list:
    """
    Single-generator compositions of an ideal row with a new leaf.
    """
    component = row.component | {new}
    candidates = []
    for generator in presentation.signature.generators:
        name = generator.name
        cherries = [lambda leaf: (name, leaf, new)]
        wrappers = [lambda node: (name, node, new)]
        if generator.symmetry == Symmetry.NONE:
            cherries.append(lambda leaf: (name, new, leaf))
            wrappers.append(lambda node: (name, new, node))
        for label in sorted(row.component):
            for cherry in cherries:
                replace = partial(
                    _replace_leaf, label=label, replacement=cherry(label)
                )
                candidates.append(_map_raw(row, component, replace))
        for wrapper in wrappers:
            candidates.append(_map_raw(row, component, wrapper))
    return candidates


def _replace_leaf(node, label: int, replacement):
    if isinstance(node, int):
        return replacement if node == label else node
    return (
        node[0],
        _replace_leaf(node[1], label, replacement),
        _replace_leaf(node[2], label, replacement),
    )


@lru_cache(maxsize=None)
def ideal_component(presentation: Presentation, n: int) -> IdealComponent:
    """
    Computes the arity-``n`` component of the ideal on labels ``1..n``.

    Parameters
    ----------
    presentation : Presentation
        Generators and relators of arity three
    n : int
        Arity, at least 3

    Returns
    -------
    IdealComponent :
        Symmetric-group stable span inside the free operad component

    Raises
    ------
    OperadQuotientException :
        Raised for arities below 3
    """
    if n < 3:
        raise OperadQuotientException(
            f"Ideals generated in arity 3 have no component of arity {n}"
        )
    labels = label_range(n)
    if n == 3:
        vectors = []
        for relator in presentation.relators:
            vectors.extend(_orbit_vectors(relator.element))
        span = Span(labels).extend(vectors)
    else:
        previous = ideal_component(presentation, n - 1)
        compositions = []
        for row in previous.span.basis():
            compositions.extend(_compositions(presentation, row, n))
        cosets = [Permutation.identity()] + [
            Permutation.transposition(k, n) for k in range(1, n)
        ]
        span = Span(labels)
        for sigma in cosets:
            span = span.extend(act(sigma, vector) for vector in compositions)
            logging.debug(
                f"{presentation.name} ideal, arity {n}: dimension "
                f"{span.dim} after coset {sigma}"
            )
    logging.info(
        f"{presentation.name} ideal, arity {n}: dimension {span.dim}"
    )
    return IdealComponent(presentation, n, span)


def free_dimension(presentation: Presentation, n: int) -> int:
    """
    Dimension of the arity-``n`` component of the free operad.
    """
    return len(enumerate_basis(presentation.signature, label_range(n)))


def quotient_dim(presentation: Presentation, n: int) -> int:
    """
    Dimension of the arity-``n`` component of the quotient operad.

    Parameters
    ----------
    presentation : Presentation
        Generators and relators of arity three
    n : int
        Arity, at least 1

    Returns
    -------
    int :
        Dimension of the free component minus the ideal component

    Raises
    ------
    OperadQuotientException :
        Raised for arities below 1
    """
    if n < 1:
        raise OperadQuotientException(f"Arity {n} is not positive")
    free = free_dimension(presentation, n)
    if n <= 2:
        return free
    return free - ideal_component(presentation, n).dim


def reduce_mod_ideal(
    vector: SpeciesVector, ideal: IdealComponent
) -> SpeciesVector:
    """
    Returns the canonical representative of the coset of ``vector``.

    Two vectors are equal in the quotient iff their representatives are
    equal.

    Parameters
    ----------
    vector : SpeciesVector
        Vector of the free operad component of the ideal
    ideal : IdealComponent
        Ideal component

    Returns
    -------
    SpeciesVector :
        Residue of the reduction against the ideal span
    """
    return ideal.span.reduce(vector)


def orbit_rank(relator: Relator, modulo: Tuple[Relator, ...] = ()) -> int:
    """
    Dimension of the span of the symmetric-group orbit of a relator,
    counted modulo the orbits of the relators in ``modulo``.

    Parameters
    ----------
    relator : Relator
        Relator whose orbit is measured
    modulo : Tuple[Relator, ...]
        Relators whose orbits are factored out first

    Returns
    -------
    int :
        ``dim span(orbit(r) + orbits(modulo)) - dim span(orbits(modulo))``
    """
    element = relator.element
    base = Span(element.component)
    for other in modulo:
        base = base.extend(_orbit_vectors(other.element))
    return base.extend(_orbit_vectors(element)).dim - base.dim


@attrs.frozen
class RelatorCombination:
    """
    Comparison of ``1/3 (r - 2 r.(23))`` with the eight-term relation
    expressing ``{[1,2],3} - {1,[2,3]}`` through elements of larger weight.

    Attributes
    ----------
    combination : SpeciesVector
        ``1/3 (r - 2 r.(23))`` for the bracket and symmetrized product
        relator ``r``
    displayed : SpeciesVector
        The eight-term relation moved to one side
    lhs : SpeciesVector
        ``{[1,2],3} - {1,[2,3]}``
    rhs : SpeciesVector
        The combination of weight-three tensors equal to ``lhs``
    jacobi : SpeciesVector
        ``[[1,2],3] - [1,[2,3]] - [[1,3],2]``
    """

    combination: SpeciesVector
    displayed: SpeciesVector
    lhs: SpeciesVector
    rhs: SpeciesVector
    jacobi: SpeciesVector

    @property
    def difference(self) -> SpeciesVector:
        return self.combination - self.displayed

    def jacobi_multiple(self) -> Tuple[bool, Fraction]:
        """
        Checks whether the difference is a multiple of the Jacobi element.

        Returns
        -------
        Tuple[bool, Fraction] :
            Whether it is, and the factor read off the leading term
        """
        difference = self.difference
        if difference.is_zero():
            return True, Fraction(0)
        key = self.jacobi.leading_key()
        factor = Fraction(difference.coefficient(key)) / (
            self.jacobi.coefficient(key)
        )
        return difference == self.jacobi * factor, factor


@lru_cache(maxsize=None)
def relator_combination() -> RelatorCombination:
    """
    Builds both sides of the identity obtained from ``1/3 (r - 2 r.(23))``.
    """
    relator = SYMMETRIZED_RELATOR.element
    swapped = act(Permutation.transposition(2, 3), relator)
    combination = (relator - swapped * 2) / 3
    lhs = parse_vector("{[1,2],3} - {1,[2,3]}", TWO_GENERATOR_SIGNATURE)
    rhs = parse_vector(
        "-1/3 {{1,2},3} - 1/3 {1,{2,3}} + 2/3 {{1,3},2} - 1/3 [{1,2},3]"
        " + 1/3 [1,{2,3}] + 2/3 [{1,3},2] + 1/3 [1,[2,3]] + 1/3 [[1,2],3]",
        TWO_GENERATOR_SIGNATURE,
    )
    jacobi = parse_vector(
        "[[1,2],3] - [1,[2,3]] - [[1,3],2]", TWO_GENERATOR_SIGNATURE
    )
    return RelatorCombination(combination, lhs - rhs, lhs, rhs, jacobi)
