# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prelie_verifier.combinatorics import (
    Permutation,
    all_permutations,
    label_range,
)
from prelie_verifier.exact_linalg import SpeciesVector
from prelie_verifier.free_operad import (
    BULLET_SIGNATURE,
    LIE_SIGNATURE,
    PRE_LIE_SIGNATURE,
    TWO_GENERATOR_SIGNATURE,
    Generator,
    Symmetry,
    TreeTensor,
    TreeTensorException,
    act,
    bullet_count,
    bullet_cut_factorize,
    canonicalize,
    enumerate_basis,
    full_compose,
    gamma_factorize,
    left_normed_combs,
    partial_compose,
    recompose_bullet_factors,
    round_trip,
    tensor_vector,
    weight,
)


PERMUTATIONS = all_permutations(label_range(4))
TENSORS = enumerate_basis(TWO_GENERATOR_SIGNATURE, label_range(4))


def tensor(raw) -> TreeTensor:
    result, sign = canonicalize(raw)
    assert sign == 1
    return result


@pytest.mark.parametrize(
    "raw, canonical, sign",
    [
        (("bracket", 2, 1), ("bracket", 1, 2), -1),
        (("bullet", 2, 1), ("bullet", 1, 2), 1),
        (("prelie", 2, 1), ("prelie", 2, 1), 1),
        (
            ("bracket", ("bracket", 3, 2), 1),
            ("bracket", 1, ("bracket", 2, 3)),
            1,
        ),
        (
            ("bullet", ("bracket", 3, 1), 2),
            ("bullet", ("bracket", 1, 3), 2),
            -1,
        ),
    ],
)
def test_canonicalize(raw, canonical, sign):
    result, result_sign = canonicalize(raw)
    assert result.node == canonical
    assert result_sign == sign


@pytest.mark.parametrize(
    "raw",
    [
        ("bracket", 1, 1),
        ("bracket", 0, 1),
        ("bullet", 1, ("bracket", 2, 1)),
    ],
)
def test_malformed_leaves(raw):
    with pytest.raises(TreeTensorException):
        canonicalize(raw)


def test_generator_outside_signature():
    with pytest.raises(TreeTensorException):
        canonicalize(("bullet", 1, 2), LIE_SIGNATURE)


def test_generators_are_binary():
    with pytest.raises(TreeTensorException):
        Generator("ternary", Symmetry.NONE, "<", ",", ">", arity=3)


@pytest.mark.parametrize(
    "signature, n, count",
    [
        (LIE_SIGNATURE, 3, 3),
        (LIE_SIGNATURE, 4, 15),
        (LIE_SIGNATURE, 5, 105),
        (LIE_SIGNATURE, 6, 945),
        (BULLET_SIGNATURE, 4, 15),
        (BULLET_SIGNATURE, 5, 105),
        (BULLET_SIGNATURE, 6, 945),
        (TWO_GENERATOR_SIGNATURE, 3, 12),
        (TWO_GENERATOR_SIGNATURE, 4, 120),
        (TWO_GENERATOR_SIGNATURE, 5, 1680),
        (TWO_GENERATOR_SIGNATURE, 6, 30240),
        (PRE_LIE_SIGNATURE, 2, 2),
        (PRE_LIE_SIGNATURE, 3, 12),
        (PRE_LIE_SIGNATURE, 4, 120),
        (PRE_LIE_SIGNATURE, 5, 1680),
        (PRE_LIE_SIGNATURE, 6, 30240),
    ],
)
def test_enumerate_basis_sizes(signature, n, count):
    basis = enumerate_basis(signature, label_range(n))
    assert len(basis) == count
    assert len(set(basis)) == count
    assert list(basis) == sorted(basis)


def test_left_normed_combs():
    combs = left_normed_combs(label_range(3))
    assert [str(comb) for comb in combs] == ["[[1,2],3]", "[[1,3],2]"]
    assert len(left_normed_combs(label_range(5))) == 24


def test_partial_compose():
    outer = tensor(("bracket", 1, 2))
    assert partial_compose(outer, 2, tensor(("bracket", 2, 3))) == (
        SpeciesVector.basis(tensor(("bracket", 1, ("bracket", 2, 3))))
    )
    assert partial_compose(outer, 1, tensor(("bracket", 3, 4))) == (
        SpeciesVector.basis(tensor(("bracket", 2, ("bracket", 3, 4))), -1)
    )


def test_partial_compose_errors():
    outer = tensor(("bracket", 1, 2))
    with pytest.raises(TreeTensorException):
        partial_compose(outer, 3, tensor(("bracket", 3, 4)))
    with pytest.raises(TreeTensorException):
        partial_compose(outer, 1, tensor(("bracket", 2, 3)))


def test_full_compose():
    outer = tensor(("bullet", 1, 2))
    parts = [tensor(("bracket", 3, 4)), TreeTensor.unit(1)]
    assert full_compose(outer, parts) == tensor_vector(
        ("bullet", ("bracket", 3, 4), 1)
    )
    with pytest.raises(TreeTensorException):
        full_compose(outer, parts[:1])


def test_action_recanonicalizes():
    vector = tensor_vector(("bracket", ("bracket", 1, 2), 3))
    image = act(Permutation.transposition(1, 3), vector)
    assert image == tensor_vector(("bracket", 1, ("bracket", 2, 3)))


@pytest.mark.parametrize(
    "raw, p, bullets, expected_weight",
    [
        (1, 1, 0, 1),
        (("bracket", 1, 2), 2, 0, 2),
        (("bullet", 1, 2), 1, 1, 2),
        (("bracket", ("bracket", 1, 2), 3), 3, 0, 3),
        (("bracket", ("bullet", 1, 2), 3), 2, 1, 3),
        (("bullet", ("bullet", 1, 2), 3), 1, 2, 3),
        (("bullet", ("bracket", 1, 2), 3), 1, 1, 2),
    ],
)
def test_weight(raw, p, bullets, expected_weight):
    result = tensor(raw)
    assert gamma_factorize(result).p == p
    assert bullet_count(result) == bullets
    assert weight(result) == expected_weight


def test_gamma_factorize_parts():
    result = tensor(("bracket", ("bullet", 1, 3), ("bracket", 2, 4)))
    factorization = gamma_factorize(result)
    assert factorization.outer == tensor(
        ("bracket", 1, ("bracket", 2, 4))
    )
    assert [part.least_label for part in factorization.parts] == [1, 2, 4]
    assert factorization.recompose() == SpeciesVector.basis(result)


def test_bullet_cut_factorize():
    result = tensor(("bullet", ("bullet", 1, 2), 3))
    factors = bullet_cut_factorize(result)
    assert factors == [tensor(("bullet", 1, 3)), tensor(("bullet", 1, 2))]
    assert recompose_bullet_factors(factors) == SpeciesVector.basis(result)
    assert bullet_cut_factorize(TreeTensor.unit(5)) == []


@pytest.mark.parametrize(
    "raw",
    [
        ("bracket", 1, 2),
        ("prelie", 1, 2),
    ],
)
def test_bullet_cut_rejects(raw):
    with pytest.raises(TreeTensorException):
        bullet_cut_factorize(tensor(raw))


def test_recompose_nothing():
    with pytest.raises(TreeTensorException):
        recompose_bullet_factors([])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip(n):
    for element in enumerate_basis(TWO_GENERATOR_SIGNATURE, label_range(n)):
        assert round_trip(element) == SpeciesVector.basis(element)


@given(
    st.sampled_from(PERMUTATIONS),
    st.sampled_from(PERMUTATIONS),
    st.lists(st.sampled_from(TENSORS), min_size=1, max_size=3),
)
def test_action_is_compatible_with_products(sigma, tau, tensors):
    vector = SpeciesVector.sum(
        label_range(4), [SpeciesVector.basis(item) for item in tensors]
    )
    assert act(sigma, act(tau, vector)) == act(tau * sigma, vector)
    assert act(Permutation.identity(), vector) == vector
