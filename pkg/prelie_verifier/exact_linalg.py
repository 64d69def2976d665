# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Exact sparse linear algebra over the rationals.

Vectors are finite combinations of basis keys of a single component of a
species, the component being identified with its label set. Spans are
kept in row echelon form: every row is pivoted on its least basis key
with coefficient one. Both types are immutable, inserting into a span
returns a new span sharing the unchanged rows with the old one.
"""

import heapq
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Optional, Tuple, Union

import attrs
from pyrsistent import PMap, PVector, pmap, pvector

from prelie_verifier.combinatorics import LabelMap

Scalar = Union[int, Fraction]


class MixedArityException(Exception):
    """
    Is raised when vectors of different components are combined.
    """

    pass


class InexactScalarException(Exception):
    """
    Is raised when a coefficient is not an integer or a Fraction.
    """

    pass


class SpanStabilityException(Exception):
    """
    Is raised when a span is not stable under the requested permutation.
    """

    def __init__(self, message: str, pivot: "BasisKey"):
        super().__init__(message)
        self.pivot = pivot


def exact(value) -> Scalar:
    """
    Validates a coefficient and returns it in its canonical form.

    Integral fractions are turned into integers so that integer-only
    computations never touch the slower Fraction arithmetic.

    Parameters
    ----------
    value : Any
        Candidate coefficient

    Returns
    -------
    Scalar :
        The same number as an int or a reduced Fraction

    Raises
    ------
    InexactScalarException :
        Raised for floats, booleans and any non-rational type
    """
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise InexactScalarException(
        f"Coefficient {value!r} of type {type(value).__name__} is not exact"
    )


def _demote(value: Scalar) -> Scalar:
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def reciprocal(value: Scalar) -> Scalar:
    """
    Exact inverse of a nonzero scalar.
    """
    return _demote(Fraction(1) / value)


class BasisKey:
    """
    Base of all basis keys.

    Subclasses provide ``labels`` (the label set of their component)
    and ``sort_key``, a tuple of a type rank and the canonical
    serialization. Keys compare by ``sort_key``, which gives a total order
    independent of how the key was constructed.
    """

    __slots__ = ()

    def __lt__(self, other: "BasisKey") -> bool:
        return self.sort_key < other.sort_key

    def __gt__(self, other: "BasisKey") -> bool:
        return self.sort_key > other.sort_key

    def act(self, label_map: LabelMap) -> Tuple["BasisKey", int]:
        """
        Relabels the key.

        Parameters
        ----------
        label_map : LabelMap
            Injective map of labels

        Returns
        -------
        Tuple[BasisKey, int] :
            Canonical relabelled key and the sign relating it to the image
        """
        raise NotImplementedError


class SpeciesVector:
    """
    Finite rational combination of basis keys of one component.

    Zero coefficients are never stored. The terms are exposed through a
    read-only mapping.
    """

    __slots__ = ("component", "_terms", "_hash")

    def __init__(
        self,
        component: Iterable[int],
        terms: Optional[Mapping[BasisKey, Scalar]] = None,
    ):
        self.component = frozenset(component)
        clean = {}
        for key, value in (terms or {}).items():
            value = exact(value)
            if not value:
                continue
            if key.labels != self.component:
                raise MixedArityException(
                    f"Key {key} has labels {set(key.labels)}, "
                    f"expected {set(self.component)}"
                )
            clean[key] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(
        cls, component: frozenset, terms: dict
    ) -> "SpeciesVector":
        vector = cls.__new__(cls)
        vector.component = component
        vector._terms = terms
        vector._hash = None
        return vector

    @classmethod
    def basis(
        cls, key: BasisKey, coefficient: Scalar = 1
    ) -> "SpeciesVector":
        return cls(key.labels, {key: coefficient})

    @classmethod
    def zero(cls, component: Iterable[int]) -> "SpeciesVector":
        return cls._from_clean(frozenset(component), {})

    @classmethod
    def sum(
        cls, component: Iterable[int], vectors: Iterable["SpeciesVector"]
    ) -> "SpeciesVector":
        component = frozenset(component)
        total = {}
        for vector in vectors:
            _check_component(component, vector.component)
            _accumulate(total, vector._terms, 1)
        return cls._from_clean(component, total)

    @property
    def terms(self) -> Mapping[BasisKey, Scalar]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key: BasisKey) -> Scalar:
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_key(self) -> BasisKey:
        return min(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpeciesVector):
            return NotImplemented
        return (
            self.component == other.component
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.component, frozenset(self._terms.items()))
            )
        return self._hash

    def __add__(self, other: "SpeciesVector") -> "SpeciesVector":
        _check_component(self.component, other.component)
        terms = dict(self._terms)
        _accumulate(terms, other._terms, 1)
        return SpeciesVector._from_clean(self.component, terms)

    def __sub__(self, other: "SpeciesVector") -> "SpeciesVector":
        _check_component(self.component, other.component)
        terms = dict(self._terms)
        _accumulate(terms, other._terms, -1)
        return SpeciesVector._from_clean(self.component, terms)

    def __neg__(self) -> "SpeciesVector":
        return self * -1

    def __mul__(self, scalar: Scalar) -> "SpeciesVector":
        scalar = exact(scalar)
        if not scalar:
            return SpeciesVector.zero(self.component)
        return SpeciesVector._from_clean(
            self.component,
            {k: _demote(v * scalar) for k, v in self._terms.items()},
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "SpeciesVector":
        return self * reciprocal(exact(scalar))

    def __repr__(self) -> str:
        return f"SpeciesVector({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            value = self._terms[key]
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            text = str(key) if magnitude == 1 else f"{magnitude} {key}"
            parts.append(f"{sign} {text}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def relabel(self, label_map: LabelMap) -> "SpeciesVector":
        """
        Relabels every key and recanonicalizes with signs.

        Parameters
        ----------
        label_map : LabelMap
            Injective map defined on the component

        Returns
        -------
        SpeciesVector :
            Vector on the image component
        """
        component = frozenset(label_map(x) for x in self.component)
        terms = {}
        for key, value in self._terms.items():
            image, sign = key.act(label_map)
            new = terms.get(image, 0) + sign * value
            if new:
                terms[image] = new
            else:
                terms.pop(image, None)
        return SpeciesVector._from_clean(component, terms)

    def map_linear(
        self,
        component: Iterable[int],
        image_of: Callable[[BasisKey], "SpeciesVector"],
    ) -> "SpeciesVector":
        """
        Applies the linear map determined by the images of basis keys.

        Parameters
        ----------
        component : Iterable[int]
            Component of the images
        image_of : Callable[[BasisKey], SpeciesVector]
            Image of a single key

        Returns
        -------
        SpeciesVector :
            Image of the vector
        """
        component = frozenset(component)
        total = {}
        for key, value in self._terms.items():
            image = image_of(key)
            _check_component(component, image.component)
            _accumulate(total, image._terms, value)
        return SpeciesVector._from_clean(component, total)


def _check_component(expected: frozenset, actual: frozenset):
    if expected != actual:
        raise MixedArityException(
            f"Component {sorted(actual)} does not match {sorted(expected)}"
        )


def _accumulate(target: dict, terms: Mapping, factor: Scalar):
    for key, value in terms.items():
        new = target.get(key, 0) + factor * value
        if new:
            target[key] = _demote(new)
        else:
            target.pop(key, None)


def relabel_action(sigma: LabelMap, vector: SpeciesVector) -> SpeciesVector:
    """
    Default action of a permutation, relabelling every basis key.
    """
    return vector.relabel(sigma)


Action = Callable[[LabelMap, SpeciesVector], SpeciesVector]


@attrs.frozen
class Span:
    """
    Row-reduced subspace of one component.

    Attributes
    ----------
    ambient : frozenset
        Label set of the component
    rows : PMap
        Rows keyed by their pivot, the least key of the row
    order : PVector
        Pivots in insertion order
    """

    ambient: frozenset = attrs.field(converter=frozenset)
    rows: PMap = attrs.field(factory=pmap, repr=False)
    order: PVector = attrs.field(factory=pvector, repr=False)

    @property
    def dim(self) -> int:
        return len(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def basis(self) -> list:
        return [self.rows[pivot] for pivot in self.order]

    def _check(self, vector: SpeciesVector):
        if vector.component != self.ambient:
            raise MixedArityException(
                f"Vector of component {sorted(vector.component)} "
                f"used with a span in {sorted(self.ambient)}"
            )

    def _reduce_terms(
        self, terms: Mapping, coordinates: Optional[dict] = None
    ) -> dict:
        return _reduce(self.rows, terms, coordinates)

    def reduce(self, vector: SpeciesVector) -> SpeciesVector:
        """
        Returns the residue of ``vector`` modulo the span.

        The residue has no pivot keys, which makes it the unique canonical
        representative of the coset of ``vector``.

        Parameters
        ----------
        vector : SpeciesVector
            Vector of the ambient component

        Returns
        -------
        SpeciesVector :
            Residue, zero iff the vector lies in the span
        """
        self._check(vector)
        return SpeciesVector._from_clean(
            self.ambient, self._reduce_terms(vector.terms)
        )

    def contains(self, vector: SpeciesVector) -> bool:
        return self.reduce(vector).is_zero()

    def express(self, vector: SpeciesVector) -> Tuple[dict, SpeciesVector]:
        """
        Writes ``vector`` as a combination of rows plus a residue.

        Parameters
        ----------
        vector : SpeciesVector
            Vector of the ambient component

        Returns
        -------
        Tuple[dict, SpeciesVector] :
            Coefficients keyed by row pivot and the residue
        """
        self._check(vector)
        coordinates = {}
        residue = self._reduce_terms(vector.terms, coordinates)
        return coordinates, SpeciesVector._from_clean(self.ambient, residue)

    def insert(self, vector: SpeciesVector) -> Tuple["Span", SpeciesVector]:
        """
        Adds a vector to the span.

        Parameters
        ----------
        vector : SpeciesVector
            Vector of the ambient component

        Returns
        -------
        Tuple[Span, SpeciesVector] :
            The enlarged span (``self`` when nothing was added) and the
            residue of the vector
        """
        residue = self.reduce(vector)
        if residue.is_zero():
            return self, residue
        pivot, row = _normalized_row(self.ambient, residue.terms)
        return (
            Span(
                self.ambient,
                self.rows.set(pivot, row),
                self.order.append(pivot),
            ),
            residue,
        )

    def extend(
        self,
        vectors: Iterable[SpeciesVector],
        stop_at_dim: Optional[int] = None,
    ) -> "Span":
        """
        Inserts many vectors at once.

        Parameters
        ----------
        vectors : Iterable[SpeciesVector]
            Vectors of the ambient component
        stop_at_dim : Optional[int]
            Dimension after which the remaining vectors are skipped

        Returns
        -------
        Span :
            The enlarged span
        """
        rows = dict(self.rows)
        order = list(self.order)
        for vector in vectors:
            if stop_at_dim is not None and len(order) >= stop_at_dim:
                break
            self._check(vector)
            residue = _reduce(rows, vector.terms)
            if not residue:
                continue
            pivot, row = _normalized_row(self.ambient, residue)
            rows[pivot] = row
            order.append(pivot)
        return Span(self.ambient, pmap(rows), pvector(order))

    def is_stable(self, sigma: LabelMap, action: Action = relabel_action):
        return all(
            self.contains(action(sigma, row)) for row in self.basis()
        )

    def restriction_matrix(
        self, sigma: LabelMap, action: Action = relabel_action
    ) -> list:
        """
        Computes the matrix C with ``sigma(rows) = C * rows``.

        Parameters
        ----------
        sigma : LabelMap
            Permutation of the ambient labels
        action : Action
            Action of permutations on vectors

        Returns
        -------
        list :
            Square matrix as a list of rows, indexed by insertion order

        Raises
        ------
        SpanStabilityException :
            Raised when the image of a row leaves the span
        """
        index = {pivot: position for position, pivot in enumerate(self.order)}
        matrix = []
        for pivot in self.order:
            image = action(sigma, self.rows[pivot])
            coordinates, residue = self.express(image)
            if not residue.is_zero():
                raise SpanStabilityException(
                    f"Image of the row pivoted at {pivot} under {sigma} "
                    "leaves the span",
                    pivot,
                )
            line = [0] * len(self.order)
            for row_pivot, value in coordinates.items():
                line[index[row_pivot]] = value
            matrix.append(line)
        return matrix

    def character(
        self, sigma: LabelMap, action: Action = relabel_action
    ) -> Scalar:
        """
        Returns the trace of ``sigma`` restricted to the span.

        Parameters
        ----------
        sigma : LabelMap
            Permutation of the ambient labels
        action : Action
            Action of permutations on vectors

        Returns
        -------
        Scalar :
            Trace of the restriction

        Raises
        ------
        SpanStabilityException :
            Raised when the image of a row leaves the span
        """
        trace = 0
        for pivot in self.order:
            image = action(sigma, self.rows[pivot])
            coordinates, residue = self.express(image)
            if not residue.is_zero():
                raise SpanStabilityException(
                    f"Image of the row pivoted at {pivot} under {sigma} "
                    "leaves the span",
                    pivot,
                )
            trace += coordinates.get(pivot, 0)
        return _demote(trace)

    def quotient_character(
        self,
        sigma: LabelMap,
        basis: Iterable[BasisKey],
        action: Action = relabel_action,
    ) -> Scalar:
        """
        Returns the trace of ``sigma`` on the ambient space modulo the span.

        The classes of the non-pivot basis keys form a basis of the
        quotient. The span has to be stable under ``sigma``, which is not
        checked here.

        Parameters
        ----------
        sigma : LabelMap
            Permutation of the ambient labels
        basis : Iterable[BasisKey]
            All basis keys of the ambient component
        action : Action
            Action of permutations on vectors

        Returns
        -------
        Scalar :
            Trace on the quotient
        """
        trace = 0
        for key in basis:
            if key in self.rows:
                continue
            image = self.reduce(action(sigma, SpeciesVector.basis(key)))
            trace += image.coefficient(key)
        return _demote(trace)


def _reduce(
    rows: Mapping, terms: Mapping, coordinates: Optional[dict] = None
) -> dict:
    work = dict(terms)
    heap = [key for key in work if key in rows]
    heapq.heapify(heap)
    seen = set()
    while heap:
        pivot = heapq.heappop(heap)
        if pivot in seen:
            continue
        seen.add(pivot)
        factor = work.get(pivot)
        if not factor:
            continue
        if coordinates is not None:
            coordinates[pivot] = factor
        # keys of a row are larger than its pivot, popped pivots never return
        for key, value in rows[pivot].items():
            new = work.get(key, 0) - factor * value
            if new:
                work[key] = _demote(new)
            else:
                work.pop(key, None)
            if key not in seen and key in rows:
                heapq.heappush(heap, key)
    return work


def _normalized_row(
    component: frozenset, terms: Mapping
) -> Tuple[BasisKey, SpeciesVector]:
    pivot = min(terms)
    inverse = reciprocal(terms[pivot])
    row = {key: _demote(value * inverse) for key, value in terms.items()}
    return pivot, SpeciesVector._from_clean(component, row)


def span_of(ambient: Iterable[int], vectors: Iterable[SpeciesVector]) -> Span:
    """
    Span of ``vectors`` inside the component over ``ambient``.
    """
    return Span(frozenset(ambient)).extend(vectors)


def span_insert(
    span: Span, vector: SpeciesVector
) -> Tuple[Span, SpeciesVector]:
    """
    Inserts ``vector`` into ``span``, see `Span.insert`.
    """
    return span.insert(vector)


def span_dim(span: Span) -> int:
    """
    Dimension of ``span``.
    """
    return span.dim


def span_character(
    span: Span, sigma: LabelMap, action: Action = relabel_action
) -> Scalar:
    """
    Character of ``sigma`` on ``span``, see `Span.character`.
    """
    logging.debug(f"Character of {sigma} on a span of dimension {span.dim}")
    return span.character(sigma, action)
