# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Tree tensors of free operads generated by binary operations.

A raw tree is either a positive integer (a leaf) or a tuple
``(generator_name, left, right)``. Canonical trees order the children of
every vertex with a symmetry by their least leaf label; each swap of
the children of an antisymmetric vertex flips the accompanying sign.

This module also implements the two factorizations of tree tensors of
the operad generated by a bracket and a symmetric product, along with
the weight statistic built on top of them.
"""

import enum
import itertools
import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import attrs

from prelie_verifier.combinatorics import LabelMap, bipartitions
from prelie_verifier.exact_linalg import BasisKey, SpeciesVector

RawTree = Union[int, tuple]


class TreeTensorException(Exception):
    """
    Is raised when a tree tensor or an operation on it is malformed.
    """

    pass


class Symmetry(enum.IntEnum):
    """
    Behaviour of a binary generator under the swap of its arguments.
    """

    NONE = 0
    SYMMETRIC = 1
    ANTISYMMETRIC = -1


def _binary(instance, attribute, value):
    if value != 2:
        raise TreeTensorException(
            f"Generator {instance.name} has arity {value}, only binary "
            "generators are supported"
        )


@attrs.frozen
class Generator:
    """
    Binary generator of a free operad.

    Attributes
    ----------
    name : str
        Identifier used in raw trees
    symmetry : Symmetry
        Sign picked up when swapping the arguments
    opening : str
        Opening delimiter in tree expressions
    separator : str
        Separator of the two arguments
    closing : str
        Closing delimiter
    arity : int
        Always 2
    """

    name: str
    symmetry: Symmetry
    opening: str
    separator: str
    closing: str
    arity: int = attrs.field(default=2, validator=_binary)

    def render(self, left: str, right: str) -> str:
        return f"{self.opening}{left}{self.separator}{right}{self.closing}"


BRACKET = Generator("bracket", Symmetry.ANTISYMMETRIC, "[", ",", "]")
BULLET = Generator("bullet", Symmetry.SYMMETRIC, "{", ",", "}")
PRE_LIE = Generator("prelie", Symmetry.NONE, "(", "<", ")")

KNOWN_GENERATORS = {
    generator.name: generator for generator in (BRACKET, BULLET, PRE_LIE)
}


def _distinct_names(instance, attribute, value):
    names = [generator.name for generator in value]
    if len(set(names)) != len(names):
        raise TreeTensorException(f"Generator names {names} are not distinct")


@attrs.frozen
class Signature:
    """
    Finite set of binary generators with distinct names.
    """

    generators: tuple = attrs.field(converter=tuple, validator=_distinct_names)

    def __contains__(self, name: str) -> bool:
        return any(generator.name == name for generator in self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(
            g.render("-", "-") for g in self.generators
        ) + "}"

    def generator(self, name: str) -> Generator:
        for generator in self.generators:
            if generator.name == name:
                return generator
        raise TreeTensorException(
            f"Generator {name} does not belong to the signature {self}"
        )


PRE_LIE_SIGNATURE = Signature((PRE_LIE,))
LIE_SIGNATURE = Signature((BRACKET,))
BULLET_SIGNATURE = Signature((BULLET,))
TWO_GENERATOR_SIGNATURE = Signature((BRACKET, BULLET))
ALL_GENERATORS_SIGNATURE = Signature(tuple(KNOWN_GENERATORS.values()))


def _serialize(node: RawTree) -> str:
    if isinstance(node, int):
        return str(node)
    name, left, right = node
    return KNOWN_GENERATORS[name].render(_serialize(left), _serialize(right))


def _leaves(node: RawTree) -> list:
    if isinstance(node, int):
        return [node]
    return _leaves(node[1]) + _leaves(node[2])


def _least(node: RawTree) -> int:
    if isinstance(node, int):
        return node
    # symmetric vertices of canonical trees keep the least label on the left
    if KNOWN_GENERATORS[node[0]].symmetry == Symmetry.NONE:
        return min(_least(node[1]), _least(node[2]))
    return _least(node[1])


def _vertices(node: RawTree) -> list:
    if isinstance(node, int):
        return []
    return [node[0]] + _vertices(node[1]) + _vertices(node[2])


@attrs.frozen(cache_hash=True)
class TreeTensor(BasisKey):
    """
    Canonical tree tensor.

    Values are created by `canonicalize`, `enumerate_basis` or the
    operations of this module, which keep ``node`` canonical. A leaf
    on its own is the unit tree of arity one.
    """

    node: RawTree
    labels: frozenset = attrs.field(init=False, eq=False, repr=False)
    sort_key: tuple = attrs.field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, "labels", frozenset(_leaves(self.node)))
        object.__setattr__(self, "sort_key", (0, _serialize(self.node)))

    @classmethod
    def unit(cls, label: int) -> "TreeTensor":
        return cls(label)

    def __str__(self) -> str:
        return self.sort_key[1]

    @property
    def arity(self) -> int:
        return len(self.labels)

    @property
    def is_trivial(self) -> bool:
        return isinstance(self.node, int)

    @property
    def root(self) -> str:
        """
        Name of the root generator, empty for the unit tree.
        """
        return "" if self.is_trivial else self.node[0]

    @property
    def least_label(self) -> int:
        return _least(self.node)

    def leaves(self) -> list:
        return _leaves(self.node)

    def vertices(self) -> list:
        return _vertices(self.node)

    def serialize(self) -> str:
        return self.sort_key[1]

    def act(self, label_map: LabelMap) -> Tuple["TreeTensor", int]:
        return canonicalize(_relabel(self.node, label_map))


def _relabel(node: RawTree, label_map: LabelMap) -> RawTree:
    if isinstance(node, int):
        return label_map(node)
    return (
        node[0],
        _relabel(node[1], label_map),
        _relabel(node[2], label_map),
    )


def _canonical(node: RawTree, signature: Signature) -> Tuple[RawTree, int]:
    if isinstance(node, int):
        return node, 1
    name, left, right = node
    generator = signature.generator(name)
    left, left_sign = _canonical(left, signature)
    right, right_sign = _canonical(right, signature)
    sign = left_sign * right_sign
    if generator.symmetry != Symmetry.NONE and _least(right) < _least(left):
        left, right = right, left
        sign *= int(generator.symmetry)
    return (name, left, right), sign


def canonicalize(
    raw: RawTree, signature: Signature = ALL_GENERATORS_SIGNATURE
) -> Tuple[TreeTensor, int]:
    """
    Computes the canonical representative of a raw tree.

    Parameters
    ----------
    raw : RawTree
        Leaf label or ``(generator_name, left, right)`` tuple
    signature : Signature
        Generators allowed in the tree

    Returns
    -------
    Tuple[TreeTensor, int] :
        Canonical tensor and the sign with ``raw = sign * tensor``

    Raises
    ------
    TreeTensorException :
        Raised for repeated or non-positive leaf labels and for generators
        outside of the signature
    """
    leaves = _leaves(raw)
    for leaf in leaves:
        if type(leaf) is not int or leaf < 1:
            raise TreeTensorException(
                f"Leaf label {leaf!r} is not a positive integer"
            )
    if len(set(leaves)) != len(leaves):
        raise TreeTensorException(f"Repeated leaf labels in {leaves}")
    node, sign = _canonical(raw, signature)
    return TreeTensor(node), sign


def tensor_vector(
    raw: RawTree, signature: Signature = ALL_GENERATORS_SIGNATURE
) -> SpeciesVector:
    """
    Basis vector of the canonical tensor of ``raw`` with its sign.
    """
    tensor, sign = canonicalize(raw, signature)
    return SpeciesVector.basis(tensor, sign)


def _enumerate_nodes(signature: Signature, labels: tuple) -> list:
    if len(labels) == 1:
        return [labels[0]]
    nodes = []
    for generator in signature.generators:
        if generator.symmetry == Symmetry.NONE:
            splits = []
            for left, right in bipartitions(labels):
                splits.extend([(left, right), (right, left)])
        else:
            splits = bipartitions(labels)
        for left, right in splits:
            for a in _cached_nodes(signature, tuple(sorted(left))):
                for b in _cached_nodes(signature, tuple(sorted(right))):
                    nodes.append((generator.name, a, b))
    return nodes


@lru_cache(maxsize=None)
def _cached_nodes(signature: Signature, labels: tuple) -> tuple:
    return tuple(_enumerate_nodes(signature, labels))


@lru_cache(maxsize=None)
def enumerate_basis(signature: Signature, labels: frozenset) -> tuple:
    """
    Lists all canonical tree tensors on a label set.

    Parameters
    ----------
    signature : Signature
        Generators of the free operad
    labels : frozenset
        Leaf labels

    Returns
    -------
    tuple :
        TreeTensor values, sorted by their canonical serialization

    Raises
    ------
    TreeTensorException :
        Raised for an empty label set
    """
    labels = frozenset(labels)
    if not labels:
        raise TreeTensorException("Cannot enumerate trees on no labels")
    nodes = _cached_nodes(signature, tuple(sorted(labels)))
    basis = sorted(TreeTensor(node) for node in nodes)
    logging.debug(
        f"{len(basis)} tree tensors on {len(labels)} leaves over {signature}"
    )
    return tuple(basis)


def _substitute(node: RawTree, slots: dict) -> RawTree:
    if isinstance(node, int):
        return slots.get(node, node)
    return (node[0], _substitute(node[1], slots), _substitute(node[2], slots))


def partial_compose(
    tensor: TreeTensor, label: int, inserted: TreeTensor
) -> SpeciesVector:
    """
    Grafts ``inserted`` at the leaf ``label`` of ``tensor``.

    Parameters
    ----------
    tensor : TreeTensor
        Outer tree tensor
    label : int
        Leaf of ``tensor`` replaced by ``inserted``
    inserted : TreeTensor
        Inner tree tensor

    Returns
    -------
    SpeciesVector :
        Single canonical term with its sign

    Raises
    ------
    TreeTensorException :
        Raised when ``label`` is not a leaf of ``tensor`` or when the
        remaining labels clash
    """
    if label not in tensor.labels:
        raise TreeTensorException(f"{label} is not a leaf of {tensor}")
    clash = (tensor.labels - {label}) & inserted.labels
    if clash:
        raise TreeTensorException(
            f"Labels {sorted(clash)} of {inserted} already occur in {tensor}"
        )
    raw = _substitute(tensor.node, {label: inserted.node})
    return tensor_vector(raw)


def compose_vectors(
    outer: SpeciesVector, label: int, inner: SpeciesVector
) -> SpeciesVector:
    """
    Bilinear extension of `partial_compose`.
    """
    component = (outer.component - {label}) | inner.component
    terms = {}
    for tensor, a in outer.items():
        for inserted, b in inner.items():
            image = partial_compose(tensor, label, inserted)
            for result, sign in image.items():
                terms[result] = terms.get(result, 0) + sign * a * b
    return SpeciesVector(component, terms)


def _as_vector(part: Union[SpeciesVector, TreeTensor]) -> SpeciesVector:
    if isinstance(part, TreeTensor):
        return SpeciesVector.basis(part)
    return part


def full_compose(
    tensor: TreeTensor, parts: Sequence[Union[SpeciesVector, TreeTensor]]
) -> SpeciesVector:
    """
    Composes ``tensor`` with one part per leaf.

    Parts are grafted at the leaves of ``tensor`` in increasing order of
    the leaf labels; the labels of ``tensor`` do not survive.

    Parameters
    ----------
    tensor : TreeTensor
        Outer tree tensor
    parts : Sequence[Union[SpeciesVector, TreeTensor]]
        Inner elements with pairwise disjoint label sets

    Returns
    -------
    SpeciesVector :
        Multilinear extension of the simultaneous grafting

    Raises
    ------
    TreeTensorException :
        Raised when the number of parts differs from the arity or when
        the parts share labels
    """
    parts = [_as_vector(part) for part in parts]
    if len(parts) != tensor.arity:
        raise TreeTensorException(
            f"{tensor} has arity {tensor.arity}, got {len(parts)} parts"
        )
    component = frozenset()
    for part in parts:
        if component & part.component:
            raise TreeTensorException(
                f"Parts share labels {sorted(component & part.component)}"
            )
        component |= part.component
    slots = sorted(tensor.labels)
    total = {}
    for choice in itertools.product(*(part.items() for part in parts)):
        coefficient = 1
        mapping = {}
        for slot, (inner, value) in zip(slots, choice):
            coefficient *= value
            mapping[slot] = inner.node
        result, sign = canonicalize(_substitute(tensor.node, mapping))
        total[result] = total.get(result, 0) + sign * coefficient
    return SpeciesVector(component, total)


def act(sigma: LabelMap, vector: SpeciesVector) -> SpeciesVector:
    """
    Right action of a permutation: relabels leaves and recanonicalizes.

    Parameters
    ----------
    sigma : LabelMap
        Permutation of the labels of the vector
    vector : SpeciesVector
        Combination of tree tensors

    Returns
    -------
    SpeciesVector :
        Relabelled combination
    """
    return vector.relabel(sigma)


@lru_cache(maxsize=None)
def left_normed_combs(labels: frozenset) -> tuple:
    """
    Lists the left-normed Lie monomials starting with the least label.

    The monomials ``[[...[a_1, a_s(2)], ...], a_s(n)]`` are ordered by the
    lexicographic order of the sequence ``s(2), ..., s(n)``; their number
    is ``(n - 1)!``.

    Parameters
    ----------
    labels : frozenset
        Leaf labels

    Returns
    -------
    tuple :
        TreeTensor values of the bracket-only operad

    Raises
    ------
    TreeTensorException :
        Raised for an empty label set
    """
    if not labels:
        raise TreeTensorException("Cannot build Lie monomials on no labels")
    first, *rest = sorted(labels)
    combs = []
    for order in itertools.permutations(rest):
        node = first
        for label in order:
            node = (BRACKET.name, node, label)
        combs.append(TreeTensor(node))
    return tuple(combs)


def _require_two_generator(tensor: TreeTensor):
    if PRE_LIE.name in tensor.vertices():
        raise TreeTensorException(
            f"{tensor} is not a tensor of the bracket and symmetric product"
        )


@attrs.frozen
class Factorization:
    """
    Factorization ``T = gamma(S; T_1, ..., T_p)`` of a tree tensor.

    Attributes
    ----------
    outer : TreeTensor
        Maximal bracket-only subtree containing the root, leaves labelled
        by the least labels of the parts
    parts : tuple
        Trivial or bullet-rooted tensors, in increasing order of their
        least labels
    """

    outer: TreeTensor
    parts: tuple

    @property
    def p(self) -> int:
        return len(self.parts)

    def recompose(self) -> SpeciesVector:
        return full_compose(self.outer, self.parts)


def gamma_factorize(tensor: TreeTensor) -> Factorization:
    """
    Splits off the maximal bracket-only subtree containing the root.

    Parameters
    ----------
    tensor : TreeTensor
        Tensor of the bracket and symmetric product operad

    Returns
    -------
    Factorization :
        Outer bracket tree and the parts grafted at its leaves
    """
    _require_two_generator(tensor)
    if tensor.root != BRACKET.name:
        return Factorization(TreeTensor.unit(tensor.least_label), (tensor,))
    parts = []

    def strip(node: RawTree) -> RawTree:
        if isinstance(node, tuple) and node[0] == BRACKET.name:
            return (node[0], strip(node[1]), strip(node[2]))
        parts.append(TreeTensor(node))
        return _least(node)

    outer = TreeTensor(strip(tensor.node))
    return Factorization(outer, tuple(sorted(parts, key=_part_order)))


def _part_order(part: TreeTensor) -> int:
    return part.least_label


def bullet_count(tensor: TreeTensor) -> int:
    """
    Number of symmetrized product vertices of ``tensor``.
    """
    return tensor.vertices().count(BULLET.name)


def weight(tensor: TreeTensor) -> int:
    """
    Returns the arity of the outer bracket tree plus the number of
    bullet vertices.
    """
    return gamma_factorize(tensor).p + bullet_count(tensor)


def bullet_cut_factorize(tensor: TreeTensor) -> List[TreeTensor]:
    """
    Cuts a bullet-rooted tensor at every bullet vertex below the root.

    Every factor has a bullet root and brackets elsewhere. A cut point is
    a leaf carrying the least label of the subtree cut off there, and the
    factors are listed in preorder, so each cut point appears in an
    earlier factor than the subtree grafted at it.

    Parameters
    ----------
    tensor : TreeTensor
        Trivial or bullet-rooted tensor

    Returns
    -------
    List[TreeTensor] :
        Factors, empty for the unit tree

    Raises
    ------
    TreeTensorException :
        Raised for bracket-rooted or pre-Lie tensors
    """
    _require_two_generator(tensor)
    if tensor.is_trivial:
        return []
    if tensor.root != BULLET.name:
        raise TreeTensorException(
            f"{tensor} is bracket-rooted, factorize it with gamma first"
        )
    factors = []

    def cut(node: RawTree):
        pending = []

        def body(current: RawTree, top: bool) -> RawTree:
            if isinstance(current, int):
                return current
            if current[0] == BULLET.name and not top:
                pending.append(current)
                return _least(current)
            return (
                current[0],
                body(current[1], False),
                body(current[2], False),
            )

        factors.append(TreeTensor(body(node, True)))
        for subtree in pending:
            cut(subtree)

    cut(tensor.node)
    return factors


def recompose_bullet_factors(factors: Iterable[TreeTensor]) -> SpeciesVector:
    """
    Composes the output of `bullet_cut_factorize` back into one tensor.

    Parameters
    ----------
    factors : Iterable[TreeTensor]
        Factors in preorder

    Returns
    -------
    SpeciesVector :
        The recomposed tensor

    Raises
    ------
    TreeTensorException :
        Raised for an empty list of factors
    """
    factors = list(factors)
    if not factors:
        raise TreeTensorException("The empty composition has no labels")
    result = SpeciesVector.basis(factors[0])
    for factor in factors[1:]:
        result = compose_vectors(
            result, factor.least_label, SpeciesVector.basis(factor)
        )
    return result


def recompose_part(part: TreeTensor) -> SpeciesVector:
    """
    Cuts a part into its bullet factors and composes them back.
    """
    if part.is_trivial:
        return SpeciesVector.basis(part)
    return recompose_bullet_factors(bullet_cut_factorize(part))


def round_trip(tensor: TreeTensor) -> SpeciesVector:
    """
    Factorizes a tensor twice and composes everything back.

    Parameters
    ----------
    tensor : TreeTensor
        Tensor of the bracket and symmetric product operad

    Returns
    -------
    SpeciesVector :
        Result of the recomposition, equal to the tensor itself
    """
    factorization = gamma_factorize(tensor)
    return full_compose(
        factorization.outer,
        [recompose_part(part) for part in factorization.parts],
    )
