# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Permutations of finite label sets and the set splittings used to build
components of species.

Labels are positive integers. A permutation acts on labels outside of
its support as the identity, so a single value can act on every
component containing its support.

Composition follows the right-action convention: ``tau.then(sigma)``
(also written ``tau * sigma``) first applies ``tau``, then ``sigma``,
i.e. ``(tau * sigma)(x) == sigma(tau(x))``.
"""

import itertools
from math import prod
from typing import Callable, Iterable, Mapping

import attrs
from sympy.utilities.iterables import multiset_partitions, partitions

LabelMap = Callable[[int], int]


class PermutationException(Exception):
    """
    Is raised when a mapping of labels is not a bijection.
    """

    pass


def _normalize_pairs(pairs: Iterable) -> tuple:
    if isinstance(pairs, Mapping):
        pairs = pairs.items()
    moved = tuple(sorted((a, b) for a, b in pairs if a != b))
    sources = [a for a, _ in moved]
    targets = [b for _, b in moved]
    if len(set(sources)) != len(sources):
        raise PermutationException(f"Label mapped twice in {moved}")
    if set(sources) != set(targets):
        raise PermutationException(
            f"Mapping {dict(moved)} does not permute its support"
        )
    return moved


@attrs.frozen(cache_hash=True)
class Permutation:
    """
    Finitely supported permutation of positive integer labels.

    Only moved labels are stored, which makes equal permutations equal
    as values regardless of the label set they were built for.
    """

    pairs: tuple = attrs.field(converter=_normalize_pairs, default=())
    _images: dict = attrs.field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, "_images", dict(self.pairs))

    def __call__(self, label: int) -> int:
        return self._images.get(label, label)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.then(other)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + " ".join(str(x) for x in cycle) + ")" for cycle in cycles
        )

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls(((a, b), (b, a)))

    @classmethod
    def from_cycles(cls, *cycles: Iterable[int]) -> "Permutation":
        """
        Builds a permutation from disjoint cycles.

        Parameters
        ----------
        *cycles : Iterable[int]
            Cycles written as sequences, ``(1, 2, 3)`` sends 1 to 2

        Returns
        -------
        Permutation :
            The product of the cycles

        Raises
        ------
        PermutationException :
            Raised when the cycles are not disjoint
        """
        mapping = {}
        for cycle in cycles:
            cycle = tuple(cycle)
            for position, label in enumerate(cycle):
                if label in mapping:
                    raise PermutationException(
                        f"Cycles {cycles} are not disjoint"
                    )
                mapping[label] = cycle[(position + 1) % len(cycle)]
        return cls(mapping)

    @property
    def support(self) -> frozenset:
        return frozenset(self._images)

    @property
    def is_identity(self) -> bool:
        return not self.pairs

    def then(self, other: "Permutation") -> "Permutation":
        """
        Returns the permutation applying ``self`` first and ``other``
        second.

        Parameters
        ----------
        other : Permutation
            Permutation applied after this one

        Returns
        -------
        Permutation :
            Composite ``x -> other(self(x))``
        """
        labels = self.support | other.support
        return Permutation({x: other(self(x)) for x in labels})

    def inverse(self) -> "Permutation":
        return Permutation({b: a for a, b in self.pairs})

    def cycles(self) -> list:
        """
        Returns the nontrivial cycles, each starting at its least label.
        """
        seen = set()
        result = []
        for start in sorted(self._images):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            result.append(tuple(cycle))
        return result

    def cycle_type(self, labels: Iterable[int]) -> tuple:
        """
        Returns the cycle lengths on ``labels`` in decreasing order,
        fixed points included.

        Parameters
        ----------
        labels : Iterable[int]
            Label set the permutation is considered on

        Returns
        -------
        tuple :
            Partition of ``len(labels)``

        Raises
        ------
        PermutationException :
            Raised when the support is not contained in ``labels``
        """
        labels = frozenset(labels)
        if not self.support <= labels:
            raise PermutationException(
                f"Permutation {self} moves labels outside of {set(labels)}"
            )
        lengths = [len(cycle) for cycle in self.cycles()]
        lengths += [1] * (len(labels) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))


def all_permutations(labels: Iterable[int]) -> list:
    """
    Lists every permutation of ``labels``.

    Parameters
    ----------
    labels : Iterable[int]
        Finite set of labels

    Returns
    -------
    list :
        List of Permutation values, identity first
    """
    ordered = sorted(labels)
    return [
        Permutation(zip(ordered, image))
        for image in itertools.permutations(ordered)
    ]


def adjacent_transpositions(labels: Iterable[int]) -> list:
    """
    Transpositions of neighbouring labels in sorted order.
    """
    ordered = sorted(labels)
    return [
        Permutation.transposition(a, b)
        for a, b in zip(ordered, ordered[1:])
    ]


def cycle_type_representatives(labels: Iterable[int]) -> list:
    """
    Picks one permutation of ``labels`` per cycle type.

    Cycles are filled with consecutive labels in increasing order, longest
    cycles first.

    Parameters
    ----------
    labels : Iterable[int]
        Finite set of labels

    Returns
    -------
    list :
        Pairs of cycle type and representative, cycle types in decreasing
        lexicographic order
    """
    ordered = sorted(labels)
    types = []
    # partitions() reuses the yielded dictionary
    for partition in partitions(len(ordered)):
        types.append(
            tuple(
                sorted(
                    itertools.chain.from_iterable(
                        [part] * count for part, count in partition.items()
                    ),
                    reverse=True,
                )
            )
        )
    result = []
    for cycle_type in sorted(types, reverse=True):
        cycles = []
        position = 0
        for length in cycle_type:
            cycles.append(ordered[position : position + length])
            position += length
        result.append((cycle_type, Permutation.from_cycles(*cycles)))
    return result


def monotone_map(source: Iterable[int], target: Iterable[int]) -> dict:
    """
    Returns the order-preserving bijection between two label sets.

    Parameters
    ----------
    source : Iterable[int]
        Domain labels
    target : Iterable[int]
        Image labels, of the same size as ``source``

    Returns
    -------
    dict :
        Mapping from the k-th smallest source label to the k-th smallest
        target label

    Raises
    ------
    PermutationException :
        Raised when the sets differ in size
    """
    source = sorted(source)
    target = sorted(target)
    if len(source) != len(target):
        raise PermutationException(
            f"Cannot map {source} bijectively onto {target}"
        )
    return dict(zip(source, target))


def set_partitions(labels: Iterable[int], blocks: int) -> list:
    """
    Lists the unordered partitions of ``labels`` into nonempty blocks.

    Parameters
    ----------
    labels : Iterable[int]
        Finite set of labels
    blocks : int
        Number of blocks

    Returns
    -------
    list :
        Tuples of frozensets ordered by least label
    """
    ordered = sorted(labels)
    if blocks < 1 or blocks > len(ordered):
        return []
    result = []
    for partition in multiset_partitions(ordered, blocks):
        result.append(
            tuple(sorted((frozenset(block) for block in partition), key=min))
        )
    return result


def ordered_splittings(labels: Iterable[int], blocks: int) -> list:
    """
    Lists ordered sequences of nonempty blocks partitioning ``labels``.

    Parameters
    ----------
    labels : Iterable[int]
        Finite set of labels
    blocks : int
        Number of blocks

    Returns
    -------
    list :
        Tuples of frozensets
    """
    return [
        splitting
        for partition in set_partitions(labels, blocks)
        for splitting in itertools.permutations(partition)
    ]


def bipartitions(labels: Iterable[int]) -> list:
    """
    Lists unordered splittings into two blocks, block with the least
    label first.
    """
    return set_partitions(labels, 2)


def double_factorial(n: int) -> int:
    """
    Returns ``n!!``, with ``(-1)!! == 1``.
    """
    return prod(range(n, 0, -2)) if n > 0 else 1


def label_range(n: int, start: int = 1) -> frozenset:
    """
    The label set ``start, ..., start + n - 1``.
    """
    return frozenset(range(start, start + n))
