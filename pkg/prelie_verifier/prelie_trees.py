# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
The rooted-tree model of the pre-Lie operad.

The component of arity ``I`` has the rooted trees with vertex set ``I``
as a basis. Composition ``T o_i S`` substitutes ``S`` for the vertex
``i``: the former parent of ``i`` becomes the parent of the root of
``S`` and every former child of ``i`` is attached to some vertex of
``S``, summing over all such choices.

On top of the model this module evaluates tree tensors of the free
operads, and builds the subspecies, suboperads, Lie closures and
filtration spans the verification checks compare.
"""

import heapq
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import attrs
import pyparsing as pp

from prelie_verifier.combinatorics import (
    LabelMap,
    Permutation,
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
)
from prelie_verifier.free_operad import (
    BRACKET,
    BULLET,
    BULLET_SIGNATURE,
    PRE_LIE,
    TWO_GENERATOR_SIGNATURE,
    RawTree,
    enumerate_basis,
    left_normed_combs,
    tensor_vector,
    weight,
)


class PreLieTreeException(Exception):
    """
    Is raised for malformed rooted trees and failed consistency checks
    of the rooted-tree model.
    """

    pass


def _render(root: int, children: Mapping[int, tuple]) -> str:
    below = children.get(root, ())
    if not below:
        return str(root)
    return f"{root}(" + ",".join(_render(c, children) for c in below) + ")"


@attrs.frozen(cache_hash=True)
class RootedTree(BasisKey):
    """
    Rooted tree whose vertices are the labels of its component.

    Attributes
    ----------
    root : int
        Root vertex
    edges : tuple
        Sorted ``(child, parent)`` pairs, one per non-root vertex
    """

    root: int
    edges: tuple
    labels: frozenset = attrs.field(init=False, eq=False, repr=False)
    children: dict = attrs.field(init=False, eq=False, repr=False)
    sort_key: tuple = attrs.field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        children = {}
        for child, parent in self.edges:
            children.setdefault(parent, []).append(child)
        children = {k: tuple(sorted(v)) for k, v in children.items()}
        object.__setattr__(self, "children", children)
        object.__setattr__(
            self,
            "labels",
            frozenset([self.root] + [child for child, _ in self.edges]),
        )
        serialization = _render(self.root, children)
        object.__setattr__(self, "sort_key", (2, serialization))

    @classmethod
    def vertex(cls, label: int) -> "RootedTree":
        return cls(label, ())

    @classmethod
    def from_parents(
        cls, root: int, parents: Mapping[int, int]
    ) -> "RootedTree":
        """
        Builds a tree from the parent of every non-root vertex.

        Parameters
        ----------
        root : int
            Root vertex
        parents : Mapping[int, int]
            Parent of each non-root vertex

        Returns
        -------
        RootedTree :
            The validated tree

        Raises
        ------
        PreLieTreeException :
            Raised when the mapping has a cycle, misses a vertex or gives
            the root a parent
        """
        if root in parents:
            raise PreLieTreeException(f"Root {root} cannot have a parent")
        labels = set(parents) | {root}
        for vertex in parents:
            seen = {vertex}
            current = vertex
            while current != root:
                if current not in parents:
                    raise PreLieTreeException(
                        f"Vertex {current} is not attached to the tree"
                    )
                current = parents[current]
                if current in seen:
                    raise PreLieTreeException(
                        f"Parent mapping {dict(parents)} has a cycle"
                    )
                seen.add(current)
            if parents[vertex] not in labels:
                raise PreLieTreeException(
                    f"Parent {parents[vertex]} is not a vertex"
                )
        return cls(root, tuple(sorted(parents.items())))

    def __str__(self) -> str:
        return self.sort_key[1]

    @property
    def arity(self) -> int:
        return len(self.labels)

    def parents(self) -> Dict[int, int]:
        return dict(self.edges)

    def act(self, label_map: LabelMap) -> Tuple["RootedTree", int]:
        edges = tuple(
            sorted((label_map(c), label_map(p)) for c, p in self.edges)
        )
        return RootedTree(label_map(self.root), edges), 1


def parse_rooted_tree(text: str) -> RootedTree:
    """
    Parses the nested form ``"1(2(4),3)"`` of a rooted tree.

    Parameters
    ----------
    text : str
        Serialized tree

    Returns
    -------
    RootedTree :
        Parsed tree

    Raises
    ------
    PreLieTreeException :
        Raised for syntax errors and repeated vertices
    """
    node = pp.Forward()
    label = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))
    below = pp.Suppress("(") + node + pp.ZeroOrMore(
        pp.Suppress(",") + node
    ) + pp.Suppress(")")
    node <<= pp.Group(label + pp.Optional(below))
    try:
        parsed = node.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as ex:
        raise PreLieTreeException(f"Invalid rooted tree {text!r}: {ex}")
    parents = {}
    seen = [parsed[0]]

    def walk(group):
        for child in group[1:]:
            parents[child[0]] = group[0]
            seen.append(child[0])
            walk(child)

    walk(parsed)
    if len(set(seen)) != len(seen):
        raise PreLieTreeException(f"Repeated vertices in {text!r}")
    return RootedTree.from_parents(parsed[0], parents)


def _unrooted_trees(ordered: Sequence[int]):
    """
    Decodes every Pruefer sequence into the edge list of a labelled tree.
    """
    n = len(ordered)
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(ordered[0], ordered[1])]
        return
    for sequence in itertools.product(ordered, repeat=n - 2):
        degree = {vertex: 1 for vertex in ordered}
        for vertex in sequence:
            degree[vertex] += 1
        leaves = [vertex for vertex in ordered if degree[vertex] == 1]
        heapq.heapify(leaves)
        edges = []
        for vertex in sequence:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, vertex))
            degree[vertex] -= 1
            if degree[vertex] == 1:
                heapq.heappush(leaves, vertex)
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
        yield edges


def _orient(edges: list, root: int) -> RootedTree:
    neighbours = {}
    for a, b in edges:
        neighbours.setdefault(a, []).append(b)
        neighbours.setdefault(b, []).append(a)
    parents = {}
    stack = [root]
    visited = {root}
    while stack:
        vertex = stack.pop()
        for other in neighbours.get(vertex, []):
            if other not in visited:
                visited.add(other)
                parents[other] = vertex
                stack.append(other)
    return RootedTree(root, tuple(sorted(parents.items())))


@lru_cache(maxsize=None)
def enumerate_rooted_trees(labels: frozenset) -> tuple:
    """
    Lists all rooted trees on a label set.

    Parameters
    ----------
    labels : frozenset
        Vertex labels

    Returns
    -------
    tuple :
        RootedTree values sorted by serialization

    Raises
    ------
    PreLieTreeException :
        Raised for an empty label set
    """
    if not labels:
        raise PreLieTreeException("Cannot enumerate trees on no vertices")
    ordered = sorted(labels)
    trees = [
        _orient(edges, root)
        for edges in _unrooted_trees(ordered)
        for root in ordered
    ]
    return tuple(sorted(trees))


def graft(a: RootedTree, b: RootedTree) -> SpeciesVector:
    """
    Pre-Lie product ``a <| b``: attaches the root of ``b`` below each
    vertex of ``a`` in turn.

    Parameters
    ----------
    a : RootedTree
        Tree receiving the graft
    b : RootedTree
        Grafted tree, on labels disjoint from ``a``

    Returns
    -------
    SpeciesVector :
        Sum of ``|a|`` trees

    Raises
    ------
    PreLieTreeException :
        Raised when the trees share labels
    """
    if a.labels & b.labels:
        raise PreLieTreeException(f"{a} and {b} share vertices")
    component = a.labels | b.labels
    base = a.edges + b.edges
    terms = {}
    for vertex in a.labels:
        tree = RootedTree(a.root, tuple(sorted(base + ((b.root, vertex),))))
        terms[tree] = terms.get(tree, 0) + 1
    return SpeciesVector._from_clean(component, terms)


def _bilinear(x: SpeciesVector, y: SpeciesVector, product) -> SpeciesVector:
    component = x.component | y.component
    terms = {}
    for a, p in x.items():
        for b, q in y.items():
            for tree, r in product(a, b).items():
                value = terms.get(tree, 0) + p * q * r
                if value:
                    terms[tree] = value
                else:
                    del terms[tree]
    return SpeciesVector._from_clean(component, terms)


def graft_vectors(x: SpeciesVector, y: SpeciesVector) -> SpeciesVector:
    """
    Bilinear extension of `graft`.
    """
    return _bilinear(x, y, graft)


def bracket_vectors(x: SpeciesVector, y: SpeciesVector) -> SpeciesVector:
    """
    Lie bracket ``x * y - y * x`` of vectors of rooted trees.
    """
    return graft_vectors(x, y) - graft_vectors(y, x)


def bullet_vectors(x: SpeciesVector, y: SpeciesVector) -> SpeciesVector:
    """
    Symmetrized product ``x * y + y * x`` of vectors of rooted trees.
    """
    return graft_vectors(x, y) + graft_vectors(y, x)


def graft_compose(
    tree: RootedTree, label: int, inserted: RootedTree
) -> SpeciesVector:
    """
    Operadic composition ``tree o_label inserted`` of rooted trees.

    Parameters
    ----------
    tree : RootedTree
        Outer tree
    label : int
        Vertex of ``tree`` replaced by ``inserted``
    inserted : RootedTree
        Inner tree

    Returns
    -------
    SpeciesVector :
        Sum of ``|inserted| ** c`` trees with coefficient one, ``c`` being
        the number of children of ``label``

    Raises
    ------
    PreLieTreeException :
        Raised when ``label`` is not a vertex of ``tree`` or when the
        remaining labels clash
    """
    if label not in tree.labels:
        raise PreLieTreeException(f"{label} is not a vertex of {tree}")
    clash = (tree.labels - {label}) & inserted.labels
    if clash:
        raise PreLieTreeException(
            f"Vertices {sorted(clash)} of {inserted} already occur in {tree}"
        )
    parents = tree.parents()
    orphans = tree.children.get(label, ())
    kept = [(c, p) for c, p in parents.items() if c != label and p != label]
    if label == tree.root:
        root = inserted.root
    else:
        root = tree.root
        kept.append((inserted.root, parents[label]))
    kept.extend(inserted.edges)
    component = (tree.labels - {label}) | inserted.labels
    targets = sorted(inserted.labels)
    terms = {}
    for choice in itertools.product(targets, repeat=len(orphans)):
        edges = tuple(sorted(kept + list(zip(orphans, choice))))
        result = RootedTree(root, edges)
        terms[result] = terms.get(result, 0) + 1
    return SpeciesVector._from_clean(component, terms)


def graft_compose_vectors(
    x: SpeciesVector, label: int, y: SpeciesVector
) -> SpeciesVector:
    """
    Bilinear extension of `graft_compose`.
    """
    component = (x.component - {label}) | y.component
    terms = {}
    for a, p in x.items():
        for b, q in y.items():
            for tree, r in graft_compose(a, label, b).items():
                value = terms.get(tree, 0) + p * q * r
                if value:
                    terms[tree] = value
                else:
                    del terms[tree]
    return SpeciesVector._from_clean(component, terms)


@lru_cache(maxsize=None)
def _evaluate_node(node: RawTree) -> SpeciesVector:
    if isinstance(node, int):
        return SpeciesVector.basis(RootedTree.vertex(node))
    name, left, right = node
    a = _evaluate_node(left)
    b = _evaluate_node(right)
    if name == PRE_LIE.name:
        return graft_vectors(a, b)
    if name == BRACKET.name:
        return bracket_vectors(a, b)
    if name == BULLET.name:
        return bullet_vectors(a, b)
    raise PreLieTreeException(f"Cannot evaluate generator {name}")


def evaluate(vector: SpeciesVector) -> SpeciesVector:
    """
    Evaluates a combination of tree tensors in the rooted-tree model.

    Leaves become single vertices, pre-Lie vertices the graft product,
    brackets its antisymmetrization and the symmetric product its
    symmetrization.

    Parameters
    ----------
    vector : SpeciesVector
        Combination of tree tensors over any known generators

    Returns
    -------
    SpeciesVector :
        Combination of rooted trees on the same labels
    """
    terms = {}
    for tensor, value in vector.items():
        for tree, r in _evaluate_node(tensor.node).items():
            new = terms.get(tree, 0) + value * r
            if new:
                terms[tree] = new
            else:
                del terms[tree]
    return SpeciesVector._from_clean(vector.component, terms)


def evaluate_text(raw: RawTree) -> SpeciesVector:
    """
    Evaluates a raw tree expression in the rooted-tree model.
    """
    return evaluate(tensor_vector(raw))


def _relabelled_rows(span: Span, target: Iterable[int]) -> list:
    mapping = monotone_map(span.ambient, target)
    return [row.relabel(mapping.__getitem__) for row in span.basis()]


@lru_cache(maxsize=None)
def lie_basis(labels: frozenset) -> tuple:
    """
    Evaluates the left-normed Lie monomials on a label set.

    Parameters
    ----------
    labels : frozenset
        Vertex labels

    Returns
    -------
    tuple :
        ``(n - 1)!`` rooted-tree vectors

    Raises
    ------
    PreLieTreeException :
        Raised when the evaluations are linearly dependent
    """
    vectors = tuple(
        evaluate(SpeciesVector.basis(monomial))
        for monomial in left_normed_combs(labels)
    )
    rank = Span(labels).extend(vectors).dim
    if rank != len(vectors):
        raise PreLieTreeException(
            f"Lie monomials on {sorted(labels)} have rank {rank}, "
            f"expected {len(vectors)}"
        )
    return vectors


def y_generators(n: int) -> list:
    """
    Lists ``l <| l' + l' <| l`` for Lie basis elements on both blocks of
    every splitting of ``1..n`` into two blocks.
    """
    vectors = []
    for left, right in bipartitions(label_range(n)):
        for x in lie_basis(left):
            for y in lie_basis(right):
                vectors.append(bullet_vectors(x, y))
    return vectors


@lru_cache(maxsize=None)
def y_span(n: int) -> Span:
    """
    Span of the symmetrized products of Lie monomials in arity ``n``.

    Parameters
    ----------
    n : int
        Arity, at least 2

    Returns
    -------
    Span :
        Subspace of the rooted-tree component on ``1..n``

    Raises
    ------
    PreLieTreeException :
        Raised for arities below 2
    """
    if n < 2:
        raise PreLieTreeException(f"Y has no component of arity {n}")
    span = Span(label_range(n)).extend(y_generators(n))
    logging.info(f"Y({n}) has dimension {span.dim}")
    return span


def y_character(n: int, sigma: Permutation) -> Scalar:
    """
    Character of ``sigma`` on the symmetrized products of arity ``n``.
    """
    return y_span(n).character(sigma)


def _block_maps(n: int, k: int) -> list:
    """
    Permutations sending ``1..k-1`` and ``k..n`` monotonically onto a
    (k-1)-subset and its complement, one per subset.
    """
    labels = sorted(label_range(n))
    maps = []
    for subset in itertools.combinations(labels, k - 1):
        rest = [label for label in labels if label not in subset]
        mapping = dict(zip(labels[: k - 1], subset))
        mapping.update(zip(labels[k - 1 :], rest))
        maps.append(Permutation(mapping))
    return maps


@lru_cache(maxsize=None)
def suboperad_component(n: int) -> Span:
    """
    Arity-``n`` component of the suboperad generated by Y.

    Parameters
    ----------
    n : int
        Arity, at least 2

    Returns
    -------
    Span :
        Y(n) together with every composition of lower components

    Raises
    ------
    PreLieTreeException :
        Raised for arities below 2
    """
    if n < 2:
        raise PreLieTreeException(f"P has no component of arity {n}")
    span = y_span(n)
    for k in range(2, n):
        m = n - k + 1
        outer = suboperad_component(k).basis()
        inner = _relabelled_rows(suboperad_component(m), range(k, n + 1))
        compositions = [
            graft_compose_vectors(x, k, y) for x in outer for y in inner
        ]
        maps = _block_maps(n, k)
        logging.debug(
            f"P({n}): {len(compositions)} compositions of P({k}) and "
            f"P({m}) under {len(maps)} relabellings"
        )
        span = span.extend(
            vector.relabel(sigma) for sigma in maps for vector in compositions
        )
    logging.info(f"P({n}) has dimension {span.dim}")
    return span


def suboperad_closure(n_max: int) -> List[Span]:
    """
    Components ``P(2), ..., P(n_max)`` of the suboperad generated by Y.

    Compositions only increase the arity, so one pass per arity in
    increasing order reaches the fixed point.
    """
    return [suboperad_component(n) for n in range(2, n_max + 1)]


def _module_basis_on(span: Span, block: frozenset) -> list:
    if span.dim == len(enumerate_rooted_trees(span.ambient)):
        return [
            SpeciesVector.basis(tree)
            for tree in enumerate_rooted_trees(frozenset(block))
        ]
    return _relabelled_rows(span, block)


def lie_module_closure(suboperad: Sequence[Span], n_max: int) -> List[Span]:
    """
    Lie subalgebra generated by the suboperad, arity by arity.

    Parameters
    ----------
    suboperad : Sequence[Span]
        Components ``P(2), ..., P(n_max)``
    n_max : int
        Largest arity

    Returns
    -------
    List[Span] :
        Components ``L(1), ..., L(n_max)``
    """
    closure = {1: Span(label_range(1)).extend(
        [SpeciesVector.basis(RootedTree.vertex(1))]
    )}
    for n in range(2, n_max + 1):
        labels = label_range(n)
        ambient = len(enumerate_rooted_trees(labels))

        def generators():
            for left, right in bipartitions(labels):
                xs = _module_basis_on(closure[len(left)], left)
                ys = _module_basis_on(closure[len(right)], right)
                for x in xs:
                    for y in ys:
                        yield bracket_vectors(x, y)
            yield from suboperad[n - 2].basis()

        closure[n] = Span(labels).extend(generators(), stop_at_dim=ambient)
        logging.info(
            f"L({n}) has dimension {closure[n].dim} out of {ambient}"
        )
    return [closure[n] for n in range(1, n_max + 1)]


@attrs.frozen
class FiltrationLevel:
    """
    Span of the images of all tensors of weight at least ``level``.
    """

    n: int
    level: int
    span: Span = attrs.field(repr=False)

    @property
    def dim(self) -> int:
        return self.span.dim


@lru_cache(maxsize=None)
def filtration_span(n: int, level: int) -> FiltrationLevel:
    """
    Computes ``F^level PL(n)`` by evaluating every tensor of the
    bracket and symmetric product operad of weight at least ``level``.

    Parameters
    ----------
    n : int
        Arity, at least 1
    level : int
        Filtration level, at least 1

    Returns
    -------
    FiltrationLevel :
        The filtered component

    Raises
    ------
    PreLieTreeException :
        Raised for non-positive arguments
    """
    if n < 1 or level < 1:
        raise PreLieTreeException(
            f"Filtration level {level} of arity {n} is not defined"
        )
    labels = label_range(n)
    tensors = [
        tensor
        for tensor in enumerate_basis(TWO_GENERATOR_SIGNATURE, labels)
        if weight(tensor) >= level
    ]
    span = Span(labels).extend(
        evaluate(SpeciesVector.basis(tensor)) for tensor in tensors
    )
    logging.info(
        f"F^{level}PL({n}) has dimension {span.dim} "
        f"({len(tensors)} tensors)"
    )
    return FiltrationLevel(n, level, span)


def _tree_vectors(block: frozenset) -> list:
    return [SpeciesVector.basis(t) for t in enumerate_rooted_trees(block)]


@lru_cache(maxsize=None)
def bullet_span(n: int) -> Span:
    """
    Span of the images of tensors with at least one symmetric product.

    It is spanned by the products ``x * y`` of arbitrary elements and by
    the brackets ``[b, y]`` with ``b`` from a lower component of this span.
    """
    labels = label_range(n)
    if n == 1:
        return Span(labels)
    ambient = len(enumerate_rooted_trees(labels))

    def generators():
        for left, right in bipartitions(labels):
            for x in _tree_vectors(left):
                for y in _tree_vectors(right):
                    yield bullet_vectors(x, y)
        for left, right in ordered_splittings(labels, 2):
            if len(left) < 2:
                continue
            for x in _relabelled_rows(bullet_span(len(left)), left):
                for y in _tree_vectors(right):
                    yield bracket_vectors(x, y)

    span = Span(labels).extend(generators(), stop_at_dim=ambient)
    logging.info(f"B({n}) has dimension {span.dim}")
    return span


@lru_cache(maxsize=None)
def third_filtration_span(n: int) -> FiltrationLevel:
    """
    Computes ``F^3 PL(n)`` from its structure instead of enumeration.

    From arity three on every bracket-rooted tensor has weight at least
    three, and a tensor with a symmetric product at the root has weight
    at least three iff one of its arguments contains another symmetric
    product. Hence ``F^3`` is spanned by all brackets and by the products
    ``b * y`` with ``b`` in `bullet_span`. Both tensors of arity two have
    weight two.

    Parameters
    ----------
    n : int
        Arity, at least 1

    Returns
    -------
    FiltrationLevel :
        The filtered component at level three
    """
    labels = label_range(n)
    if n <= 2:
        return FiltrationLevel(n, 3, Span(labels))
    ambient = len(enumerate_rooted_trees(labels))

    def generators():
        for left, right in bipartitions(labels):
            for x in _tree_vectors(left):
                for y in _tree_vectors(right):
                    yield bracket_vectors(x, y)
        for left, right in ordered_splittings(labels, 2):
            if len(left) < 2:
                continue
            for x in _relabelled_rows(bullet_span(len(left)), left):
                for y in _tree_vectors(right):
                    yield bullet_vectors(x, y)

    span = Span(labels).extend(generators(), stop_at_dim=ambient)
    logging.info(f"F^3PL({n}) has dimension {span.dim}")
    return FiltrationLevel(n, 3, span)


@lru_cache(maxsize=None)
def _y_plus_third(n: int) -> Span:
    return third_filtration_span(n).span.extend(y_span(n).basis())


def graded_y_dimension(n: int) -> int:
    """
    Dimension of the image of Y(n) in ``F^2 PL(n) / F^3 PL(n)``.
    """
    return _y_plus_third(n).dim - third_filtration_span(n).dim


def graded_y_character(n: int, sigma: Permutation) -> Scalar:
    """
    Character of ``sigma`` on the image of Y(n) in the associated graded.

    Computed as the difference of the characters on ``PL(n) / F^3`` and
    ``PL(n) / (Y(n) + F^3)``, both read off reduced basis trees.

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
    """
    trees = enumerate_rooted_trees(label_range(n))
    third = third_filtration_span(n).span
    return third.quotient_character(sigma, trees) - _y_plus_third(
        n
    ).quotient_character(sigma, trees)


@attrs.frozen
class GradedRelation:
    """
    Filtration levels of ``{[1,2],3}`` and ``{[1,2],3} - {1,[2,3]}``.
    """

    difference_in_third: bool
    element_in_second: bool
    element_in_third: bool

    @property
    def holds(self) -> bool:
        return (
            self.difference_in_third
            and self.element_in_second
            and not self.element_in_third
        )


def graded_relation(n: int = 3) -> GradedRelation:
    """
    Locates ``{[1,2],3}`` and ``{[1,2],3} - {1,[2,3]}`` in the filtration.

    Parameters
    ----------
    n : int
        Arity, only 3 is meaningful

    Returns
    -------
    GradedRelation :
        Membership of both elements in ``F^2`` and ``F^3``

    Raises
    ------
    PreLieTreeException :
        Raised for arities other than 3
    """
    if n != 3:
        raise PreLieTreeException("The relation lives in arity 3")
    element = evaluate_text(("bullet", ("bracket", 1, 2), 3))
    other = evaluate_text(("bullet", 1, ("bracket", 2, 3)))
    third = filtration_span(3, 3).span
    second = filtration_span(3, 2).span
    return GradedRelation(
        difference_in_third=third.contains(element - other),
        element_in_second=second.contains(element),
        element_in_third=third.contains(element),
    )


def gr_relation_check(n: int = 3) -> bool:
    """
    Checks that ``[a1,a2] * a3 = a1 * [a2,a3]`` holds in the associated
    graded but not in ``PL`` itself.
    """
    return graded_relation(n).holds


@lru_cache(maxsize=None)
def bullet_suboperad_span(n: int) -> Span:
    """
    Span of the images of tensors built from the symmetric product only.
    """
    labels = label_range(n)
    span = Span(labels).extend(
        evaluate(SpeciesVector.basis(tensor))
        for tensor in enumerate_basis(BULLET_SIGNATURE, labels)
    )
    logging.info(f"Symmetric product suboperad in arity {n}: {span.dim}")
    return span


def rooted_tree_count(n: int) -> int:
    """
    Number of rooted trees on ``n`` labelled vertices.
    """
    return len(enumerate_rooted_trees(label_range(n)))
