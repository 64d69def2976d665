# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Registry of verification checks, their execution and the reports.

Every check is a pure function of a `VerifyConfig` returning a list of
`CheckResult` values. Checks are addressed by id and can run in separate
worker processes; results keep the registry order regardless of
scheduling.
"""

import json
import logging
import random
import time
from fractions import Fraction
from functools import lru_cache, partial
from importlib.resources import files
from math import factorial
from multiprocessing import Pool
from typing import Any, Callable, Dict, List, Optional, Union

import attrs
import jsonschema

from prelie_verifier.combinatorics import (
    cycle_type_representatives,
    double_factorial,
    label_range,
)
from prelie_verifier.cyclic_lie import cl_character, cl_component
from prelie_verifier.exact_linalg import Span, SpeciesVector
from prelie_verifier.free_operad import (
    BRACKET,
    BULLET,
    PRE_LIE_SIGNATURE,
    TWO_GENERATOR_SIGNATURE,
    bullet_cut_factorize,
    canonicalize,
    compose_vectors,
    enumerate_basis,
    gamma_factorize,
    recompose_bullet_factors,
    round_trip,
    tensor_vector,
    weight,
)
from prelie_verifier.operad_quotient import (
    JACOBI_RELATOR,
    LIE_PRESENTATION,
    PRE_LIE_PRESENTATION,
    PRE_LIE_RELATOR,
    SYMMETRIZED_RELATOR,
    TWO_GENERATOR_PRESENTATION,
    ideal_component,
    orbit_rank,
    quotient_dim,
    reduce_mod_ideal,
    relator_combination,
)
from prelie_verifier.prelie_trees import (
    bullet_suboperad_span,
    evaluate,
    filtration_span,
    graded_relation,
    graded_y_character,
    graded_y_dimension,
    gr_relation_check,
    graft_compose_vectors,
    lie_module_closure,
    rooted_tree_count,
    suboperad_closure,
    suboperad_component,
    third_filtration_span,
    y_character,
    y_span,
)
from prelie_verifier.resources import schemas
from prelie_verifier.species_egf import (
    EGFSeries,
    free_operad_series,
    partition_composition_dimension,
    verify_chapoton_identity,
)

REPORT_VERSION = "1.0"

# largest arities allowed without and with --allow-long-running
ARITY_CAPS = {"trees": (6, 7), "quotient": (5, 6)}


class VerifyUsageException(Exception):
    """
    Is raised when a run requests unknown checks or invalid settings.
    """

    pass


def _checks_tuple(value) -> tuple:
    return (value,) if isinstance(value, str) else tuple(value)


@attrs.frozen
class VerifyConfig:
    """
    Settings of a verification run.

    Attributes
    ----------
    checks : tuple
        Selected check ids, ``("all",)`` for every check
    max_arity : int
        Largest arity of checks in the rooted-tree model
    quotient_max_arity : int
        Largest arity of checks on quotients of free operads
    egf_order : int
        Truncation order of generating functions
    output_format : str
        ``text`` or ``json``
    parallel : int
        Number of worker processes
    allow_long_running : bool
        Raises the arity caps by one
    samples : int
        Random instances drawn by the sampling checks
    seed : int
        Seed of the sampling checks
    verbosity : str
        Logging level name
    """

    checks: tuple = attrs.field(default=("all",), converter=_checks_tuple)
    max_arity: int = 6
    quotient_max_arity: int = 5
    egf_order: int = 8
    output_format: str = attrs.field(
        default="text", validator=attrs.validators.in_(("text", "json"))
    )
    parallel: int = 1
    allow_long_running: bool = False
    samples: int = 500
    seed: int = 0
    verbosity: str = "WARNING"


@attrs.frozen
class CheckResult:
    """
    Single comparison of an expected and a computed value.

    A failed comparison of a check registered with ``diverges_from`` is
    ``divergent`` from that arity on: the reading it compares is known
    not to hold there, so it does not fail the run.
    """

    check_id: str
    arity: Optional[int]
    subject: str
    expected: str
    actual: str
    passed: bool
    runtime_ms: int
    divergent: bool = False

    @property
    def status(self) -> str:
        if self.passed:
            return "PASS"
        return "DIVERGES" if self.divergent else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return attrs.asdict(self)


@attrs.frozen
class Check:
    """
    Registered check.

    Attributes
    ----------
    check_id : str
        Identifier used on the command line
    description : str
        Quantities the check compares
    domain : Optional[str]
        Key of `ARITY_CAPS` bounding the configured arity, None for
        checks of fixed size
    function : Callable
        Function computing the results from a `VerifyConfig`
    diverges_from : Optional[int]
        Smallest arity at which the compared reading is known to fail,
        None for checks expected to pass everywhere
    """

    check_id: str
    description: str
    domain: Optional[str]
    function: Callable = attrs.field(repr=False)
    diverges_from: Optional[int] = None

    def mark_divergent(self, result: CheckResult) -> CheckResult:
        """
        Marks a failed comparison at or above `diverges_from` as
        divergent. Errors are never divergent.
        """
        if (
            result.passed
            or self.diverges_from is None
            or result.arity is None
            or result.arity < self.diverges_from
            or result.actual.startswith("error:")
        ):
            return result
        return attrs.evolve(result, divergent=True)


CHECKS: Dict[str, Check] = {}


def register(
    check_id: str,
    description: str,
    domain: Optional[str],
    diverges_from: Optional[int] = None,
):
    """
    Decorator adding a check function to `CHECKS`.

    Parameters
    ----------
    check_id : str
        Identifier of the check
    description : str
        Quantities the check compares
    domain : Optional[str]
        Key of `ARITY_CAPS` or None
    diverges_from : Optional[int]
        Arity from which failures of the check are divergent

    Returns
    -------
    Callable :
        The decorator
    """

    def decorator(function):
        CHECKS[check_id] = Check(
            check_id, description, domain, function, diverges_from
        )
        return function

    return decorator


def _text(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_text(item) for item in value) + ")"
    return str(value)


def _value(source):
    return source() if callable(source) else source


def measure(
    check_id: str,
    arity: Optional[int],
    subject: str,
    expected: Union[Any, Callable],
    actual: Union[Any, Callable],
) -> CheckResult:
    """
    Computes both sides of a comparison and records the outcome.

    Exceptions are turned into failed results.

    Parameters
    ----------
    check_id : str
        Identifier of the check
    arity : Optional[int]
        Arity of the compared components
    subject : str
        Short name of the compared quantity
    expected : Union[Any, Callable]
        Expected value or a function computing it
    actual : Union[Any, Callable]
        Computed value or a function computing it

    Returns
    -------
    CheckResult :
        The recorded comparison
    """
    start = time.perf_counter()
    try:
        expected_value = _value(expected)
        actual_value = _value(actual)
        passed = expected_value == actual_value
        expected_text = _text(expected_value)
        actual_text = _text(actual_value)
    except Exception as ex:
        logging.warning(f"{check_id} {subject} (n={arity}) failed: {ex}")
        passed = False
        expected_text = _text(expected) if not callable(expected) else "-"
        actual_text = f"error: {ex}"
    runtime_ms = int((time.perf_counter() - start) * 1000)
    result = CheckResult(
        check_id,
        arity,
        subject,
        expected_text,
        actual_text,
        passed,
        runtime_ms,
    )
    logging.info(
        f"{'PASS' if passed else 'FAIL'} {check_id} n={arity} {subject}"
    )
    return result


@register(
    "quotient-dims",
    "The pre-Lie operad as a quotient of free operads: rooted trees, the "
    "pre-Lie identity and the bracket and symmetrized product presentation",
    "quotient",
)
def check_quotient_dims(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares quotient dimensions with ``n^(n - 1)`` and ``(n - 1)!`` and
    checks that every ideal component is stable under ``S_n``.
    """
    check_id = "quotient-dims"
    results = []
    for n in range(3, config.quotient_max_arity + 1):
        for presentation in (
            PRE_LIE_PRESENTATION,
            TWO_GENERATOR_PRESENTATION,
            LIE_PRESENTATION,
        ):
            results.append(
                measure(
                    check_id,
                    n,
                    f"{presentation.name} ideal is S_n-stable",
                    True,
                    lambda n=n, presentation=presentation: ideal_component(
                        presentation, n
                    ).verify_stability(),
                )
            )
        expected = n ** (n - 1)
        results.append(
            measure(
                check_id,
                n,
                "rooted trees",
                expected,
                partial(rooted_tree_count, n),
            )
        )
        for presentation in (PRE_LIE_PRESENTATION, TWO_GENERATOR_PRESENTATION):
            results.append(
                measure(
                    check_id,
                    n,
                    presentation.name,
                    expected,
                    partial(quotient_dim, presentation, n),
                )
            )
        results.append(
            measure(
                check_id,
                n,
                LIE_PRESENTATION.name,
                factorial(n - 1),
                partial(quotient_dim, LIE_PRESENTATION, n),
            )
        )
    return results


@register(
    "orbit-rank",
    "Symmetric-group orbits of the relators; modulo the Jacobi identity the "
    "orbit of the bracket and symmetrized product relator is "
    "two-dimensional",
    None,
)
def check_orbit_rank(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares the ranks of the relator orbits with 3, 2, 1 and 3.

    The orbit of the bracket and symmetrized product relator contains
    the Jacobi element, so it has rank 3 and rank 2 modulo the Jacobi
    orbit.
    """
    return [
        measure(
            "orbit-rank",
            3,
            str(relator) + (" modulo Jacobi identity" if modulo else ""),
            expected,
            partial(orbit_rank, relator, modulo),
        )
        for relator, modulo, expected in (
            (SYMMETRIZED_RELATOR, (), 3),
            (SYMMETRIZED_RELATOR, (JACOBI_RELATOR,), 2),
            (JACOBI_RELATOR, (), 1),
            (PRE_LIE_RELATOR, (), 3),
        )
    ]


def _jacobi_factor():
    is_multiple, factor = relator_combination().jacobi_multiple()
    return factor if is_multiple else "not a multiple"


@register(
    "relator-combination",
    "The combination 1/3 (r - 2 r.(23)) of the relator and the relation "
    "expressing {[1,2],3} - {1,[2,3]} through elements of weight three",
    None,
)
def check_relator_combination(config: VerifyConfig) -> List[CheckResult]:
    """
    Locates the difference of the combination and the eight-term
    relation, and compares both sides of the relation in rooted trees.
    """
    check_id = "relator-combination"
    identity = relator_combination()
    ideal = ideal_component(TWO_GENERATOR_PRESENTATION, 3)
    return [
        measure(
            check_id,
            3,
            "difference over the Jacobi element",
            Fraction(-1, 3),
            _jacobi_factor,
        ),
        measure(
            check_id,
            3,
            "relation lies in the ideal",
            True,
            lambda: ideal.span.contains(identity.displayed),
        ),
        measure(
            check_id,
            3,
            "combination evaluates to zero",
            True,
            lambda: evaluate(identity.combination).is_zero(),
        ),
        measure(
            check_id,
            3,
            "sides evaluate equally",
            True,
            lambda: evaluate(identity.lhs) == evaluate(identity.rhs),
        ),
    ]


def _bracket_weight_violations(n_max: int) -> int:
    violations = 0
    for total in range(2, n_max + 1):
        for a in range(1, total):
            left = enumerate_basis(TWO_GENERATOR_SIGNATURE, label_range(a))
            right = enumerate_basis(
                TWO_GENERATOR_SIGNATURE, label_range(total - a, a + 1)
            )
            for x in left:
                for y in right:
                    tensor, _ = canonicalize((BRACKET.name, x.node, y.node))
                    if weight(tensor) != weight(x) + weight(y):
                        violations += 1
    return violations


def _composition_weight_violations(n_max: int) -> int:
    violations = 0
    for n in range(1, n_max):
        for x in enumerate_basis(TWO_GENERATOR_SIGNATURE, label_range(n)):
            for label in sorted(x.labels):
                for generator in (BRACKET, BULLET):
                    inner = tensor_vector((generator.name, label, n + 1))
                    image = compose_vectors(
                        SpeciesVector.basis(x), label, inner
                    )
                    violations += sum(
                        weight(tensor) < weight(x) for tensor in image.keys()
                    )
    return violations


def _same_span(first: Span, second: Span) -> bool:
    return first.dim == second.dim and all(
        second.contains(row) for row in first.basis()
    )


@register(
    "filtration",
    "The weight filtration: bimodule compatibility, F^2 and F^3 in arity "
    "three and the relation holding only in the associated graded",
    "trees",
)
def check_filtration(config: VerifyConfig) -> List[CheckResult]:
    """
    Checks the filtration levels in arity three, the weight behaviour
    of brackets and compositions and the structural description of F^3.
    """
    check_id = "filtration"
    bound = min(config.max_arity, 5)
    results = [
        measure(
            check_id,
            3,
            "dim F^2",
            9,
            lambda: filtration_span(3, 2).dim,
        ),
        measure(
            check_id,
            3,
            "dim F^3",
            8,
            lambda: filtration_span(3, 3).dim,
        ),
        measure(
            check_id,
            3,
            "{[1,2],3} - {1,[2,3]} in F^3",
            True,
            lambda: graded_relation(3).difference_in_third,
        ),
        measure(
            check_id,
            3,
            "{[1,2],3} in F^2",
            True,
            lambda: graded_relation(3).element_in_second,
        ),
        measure(
            check_id,
            3,
            "{[1,2],3} in F^3",
            False,
            lambda: graded_relation(3).element_in_third,
        ),
        measure(
            check_id,
            3,
            "relation holds in the associated graded only",
            True,
            gr_relation_check,
        ),
        measure(
            check_id,
            None,
            f"bracket weight violations up to arity {bound}",
            0,
            partial(_bracket_weight_violations, bound),
        ),
        measure(
            check_id,
            None,
            f"composition weight violations up to arity {bound}",
            0,
            partial(_composition_weight_violations, bound),
        ),
    ]
    for n in range(3, bound + 1):
        results.append(
            measure(
                check_id,
                n,
                "structural F^3 equals enumerated F^3",
                True,
                lambda n=n: _same_span(
                    third_filtration_span(n).span, filtration_span(n, 3).span
                ),
            )
        )
    return results


def _character_table(character: Callable, n: int) -> tuple:
    return tuple(
        character(n, sigma)
        for _, sigma in cycle_type_representatives(label_range(n))
    )


@register(
    "cyclic-lie-iso",
    "Symmetrized products of Lie elements against the cyclic Lie species: "
    "dimensions and characters",
    "trees",
    diverges_from=3,
)
def check_cyclic_lie_iso(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares Y(n) with CL(n) literally.
    """
    check_id = "cyclic-lie-iso"
    results = []
    for n in range(2, config.max_arity + 1):
        results.append(
            measure(
                check_id,
                n,
                "dimension",
                lambda n=n: cl_component(n).dim,
                lambda n=n: y_span(n).dim,
            )
        )
        results.append(
            measure(
                check_id,
                n,
                "characters per cycle type",
                partial(_character_table, cl_character, n),
                partial(_character_table, y_character, n),
            )
        )
    return results


@register(
    "cyclic-lie-graded",
    "The image of the symmetrized products in F^2 / F^3 against the cyclic "
    "Lie species: dimensions and characters",
    "trees",
    diverges_from=4,
)
def check_cyclic_lie_graded(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares the image of Y(n) in the associated graded with CL(n).
    """
    check_id = "cyclic-lie-graded"
    results = []
    for n in range(2, config.max_arity + 1):
        results.append(
            measure(
                check_id,
                n,
                "dimension",
                lambda n=n: cl_component(n).dim,
                partial(graded_y_dimension, n),
            )
        )
        results.append(
            measure(
                check_id,
                n,
                "characters per cycle type",
                partial(_character_table, cl_character, n),
                partial(_character_table, graded_y_character, n),
            )
        )
    return results


def _free_operad_dimensions(dimensions: Dict[int, int], order: int) -> list:
    generators = EGFSeries.from_dimensions(dimensions, order)
    return free_operad_series(generators).dimensions()


def _suboperad_results(
    check_id: str, config: VerifyConfig, generator_dim: Callable
) -> List[CheckResult]:
    order = config.max_arity

    @lru_cache(maxsize=None)
    def expected_dimensions():
        return _free_operad_dimensions(
            {n: generator_dim(n) for n in range(2, order + 1)}, order
        )

    return [
        measure(
            check_id,
            n,
            "dimension",
            lambda n=n: expected_dimensions()[n],
            lambda n=n: suboperad_component(n).dim,
        )
        for n in range(2, order + 1)
    ]


@register(
    "suboperad-free",
    "The suboperad generated by the symmetrized products against the free "
    "operad on the cyclic Lie species",
    "trees",
    diverges_from=3,
)
def check_suboperad_free(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares dim P(n) with the free operad on CL.
    """
    return _suboperad_results(
        "suboperad-free", config, lambda n: cl_component(n).dim
    )


@register(
    "suboperad-free-measured",
    "The suboperad generated by the symmetrized products against the free "
    "operad on their measured span",
    "trees",
    diverges_from=4,
)
def check_suboperad_free_measured(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares dim P(n) with the free operad on Y.
    """
    return _suboperad_results(
        "suboperad-free-measured", config, lambda n: y_span(n).dim
    )


@register(
    "lie-module-free",
    "The Lie subalgebra generated by the suboperad exhausts the rooted "
    "trees",
    "trees",
)
def check_lie_module_free(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares the Lie closure of P(n) with ``n^(n - 1)``.
    """
    order = config.max_arity

    @lru_cache(maxsize=None)
    def closure():
        return lie_module_closure(suboperad_closure(order), order)

    return [
        measure(
            "lie-module-free",
            n,
            "dimension",
            n ** (n - 1),
            lambda n=n: closure()[n - 1].dim,
        )
        for n in range(2, order + 1)
    ]


@register(
    "egf",
    "Lie composed with the free operad on the cyclic Lie species has the "
    "dimensions of the rooted trees",
    "trees",
)
def check_egf(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares the series identity term by term and the series composition
    with the sum over set partitions.
    """
    check_id = "egf"
    order = config.egf_order
    cl_dimensions = {
        n: cl_component(n).dim
        for n in range(2, min(config.max_arity, order) + 1)
    }
    table = verify_chapoton_identity(order, cl_dimensions)
    results = [
        measure(
            check_id,
            row.n,
            "Lie(T(CL))" + (", extrapolated CL" if row.extrapolated else ""),
            row.expected,
            row.actual,
        )
        for row in table.rows
    ]
    free = _free_operad_dimensions(cl_dimensions, order)
    lie = {n: factorial(n - 1) for n in range(1, order + 1)}
    inner = {n: free[n] for n in range(1, order + 1)}
    series = EGFSeries.lie_series(order).compose(
        EGFSeries.from_dimensions(inner, order)
    )
    for n in range(1, min(order, 6) + 1):
        results.append(
            measure(
                check_id,
                n,
                "composition against set partitions",
                partial(partition_composition_dimension, lie, inner, n),
                series.dimensions()[n],
            )
        )
    return results


def _factorization_failures(n: int) -> int:
    failures = 0
    for tensor in enumerate_basis(TWO_GENERATOR_SIGNATURE, label_range(n)):
        expected = SpeciesVector.basis(tensor)
        factorization = gamma_factorize(tensor)
        if factorization.recompose() != expected:
            failures += 1
        if round_trip(tensor) != expected:
            failures += 1
        for part in factorization.parts:
            if part.is_trivial:
                continue
            factors = bullet_cut_factorize(part)
            if recompose_bullet_factors(factors) != SpeciesVector.basis(part):
                failures += 1
    return failures


@register(
    "factorization",
    "Unique factorization of tensors through the bracket operad and the "
    "cut of the symmetrized product parts",
    "quotient",
)
def check_factorization(config: VerifyConfig) -> List[CheckResult]:
    """
    Recomposes the factorizations of every tensor of the bracket and
    symmetric product operad.
    """
    return [
        measure(
            "factorization",
            n,
            "round-trip failures",
            0,
            partial(_factorization_failures, n),
        )
        for n in range(1, min(config.quotient_max_arity, 5) + 1)
    ]


def _random_combination(rng: random.Random, basis: tuple) -> SpeciesVector:
    terms = {}
    for tensor in rng.sample(basis, min(len(basis), rng.randint(1, 3))):
        terms[tensor] = rng.choice((-2, -1, 1, 2, 3))
    return SpeciesVector(basis[0].labels, terms)


def morphism_agreements(samples: int, seed: int) -> int:
    """
    Counts random compositions on which evaluation in rooted trees
    commutes with the operadic composition.

    Parameters
    ----------
    samples : int
        Number of random instances, of arity at most five
    seed : int
        Seed of the sampler

    Returns
    -------
    int :
        Number of agreeing instances
    """
    rng = random.Random(seed)
    agreements = 0
    for _ in range(samples):
        signature = rng.choice((PRE_LIE_SIGNATURE, TWO_GENERATOR_SIGNATURE))
        k = rng.randint(1, 4)
        m = rng.randint(1, 6 - k)
        outer = rng.choice(enumerate_basis(signature, label_range(k)))
        label = rng.choice(sorted(outer.labels))
        inner_labels = frozenset([label, *range(k + 1, k + m)])
        inner = rng.choice(enumerate_basis(signature, inner_labels))
        x = SpeciesVector.basis(outer)
        y = SpeciesVector.basis(inner)
        composed = evaluate(compose_vectors(x, label, y))
        grafted = graft_compose_vectors(evaluate(x), label, evaluate(y))
        agreements += composed == grafted
    return agreements


def equality_agreements(samples: int, seed: int) -> int:
    """
    Counts random pairs of pre-Lie tensor combinations on which equality
    modulo the pre-Lie ideal agrees with equality of rooted trees.

    Half of the pairs differ by an element of the ideal.

    Parameters
    ----------
    samples : int
        Number of random pairs, of arity at most four
    seed : int
        Seed of the sampler

    Returns
    -------
    int :
        Number of agreeing pairs
    """
    rng = random.Random(seed)
    agreements = 0
    for _ in range(samples):
        n = rng.randint(2, 4)
        basis = enumerate_basis(PRE_LIE_SIGNATURE, label_range(n))
        x = _random_combination(rng, basis)
        if n >= 3 and rng.random() < 0.5:
            rows = ideal_component(PRE_LIE_PRESENTATION, n).span.basis()
            y = x
            for row in rng.sample(rows, min(len(rows), 2)):
                y = y + row * rng.choice((-1, 1, 2))
        else:
            y = _random_combination(rng, basis)
        if n >= 3:
            ideal = ideal_component(PRE_LIE_PRESENTATION, n)
            equal_in_quotient = reduce_mod_ideal(x - y, ideal).is_zero()
        else:
            equal_in_quotient = (x - y).is_zero()
        agreements += equal_in_quotient == (evaluate(x) == evaluate(y))
    return agreements


@register(
    "model-coherence",
    "Rooted trees as a model of the pre-Lie operad: evaluation is an "
    "operad morphism and agrees with reduction modulo the ideal",
    None,
)
def check_model_coherence(config: VerifyConfig) -> List[CheckResult]:
    """
    Samples compositions and pairs of combinations.
    """
    return [
        measure(
            "model-coherence",
            None,
            "evaluation commutes with composition",
            config.samples,
            partial(morphism_agreements, config.samples, config.seed),
        ),
        measure(
            "model-coherence",
            None,
            "quotient equality agrees with rooted trees",
            config.samples,
            partial(equality_agreements, config.samples, config.seed),
        ),
    ]


@register(
    "symmetric-product-free",
    "The symmetrized product generates a free suboperad of the rooted "
    "trees",
    "trees",
)
def check_symmetric_product_free(config: VerifyConfig) -> List[CheckResult]:
    """
    Compares the span of symmetric product tensors with ``(2n - 3)!!``.
    """
    return [
        measure(
            "symmetric-product-free",
            n,
            "dimension",
            double_factorial(2 * n - 3),
            lambda n=n: bullet_suboperad_span(n).dim,
        )
        for n in range(2, config.max_arity + 1)
    ]


def resolve_checks(requested) -> List[str]:
    """
    Expands ``all`` and validates check ids.

    Parameters
    ----------
    requested : Iterable[str]
        Check ids given by the user

    Returns
    -------
    List[str] :
        Check ids in registry order

    Raises
    ------
    VerifyUsageException :
        Raised for unknown ids
    """
    requested = set(requested)
    if "all" in requested:
        return list(CHECKS)
    unknown = requested - set(CHECKS)
    if unknown:
        raise VerifyUsageException(
            f"Unknown checks {sorted(unknown)}, available: {list(CHECKS)}"
        )
    return [check_id for check_id in CHECKS if check_id in requested]


def _cap_breach(check: Check, config: VerifyConfig) -> Optional[str]:
    if check.domain is None:
        return None
    cap = ARITY_CAPS[check.domain][int(config.allow_long_running)]
    arity = (
        config.max_arity
        if check.domain == "trees"
        else config.quotient_max_arity
    )
    if arity <= cap:
        return None
    hint = "" if config.allow_long_running else ", see --allow-long-running"
    return f"arity {arity} exceeds the cap {cap}{hint}"


def run_check(check_id: str, config: VerifyConfig) -> List[CheckResult]:
    """
    Runs one check, turning failures outside of comparisons into a
    failed result.

    Parameters
    ----------
    check_id : str
        Identifier of a registered check
    config : VerifyConfig
        Settings of the run

    Returns
    -------
    List[CheckResult] :
        Results of the check
    """
    check = CHECKS[check_id]
    breach = _cap_breach(check, config)
    if breach:
        logging.warning(f"Skipping {check_id}: {breach}")
        return [
            CheckResult(
                check_id, None, "resource cap", "-", breach, False, 0
            )
        ]
    logging.info(f"Running {check_id}")
    try:
        results = check.function(config)
        return [check.mark_divergent(result) for result in results]
    except Exception as ex:
        logging.error(f"Check {check_id} failed: {ex}")
        return [
            CheckResult(
                check_id, None, "check", "-", f"error: {ex}", False, 0
            )
        ]


def _run_check_star(arguments: tuple) -> List[CheckResult]:
    return run_check(*arguments)


@attrs.frozen
class Report:
    """
    Results of a verification run together with its settings.
    """

    config: VerifyConfig
    results: tuple = attrs.field(converter=tuple)
    version: str = REPORT_VERSION

    @property
    def passed(self) -> bool:
        return all(
            result.passed or result.divergent for result in self.results
        )

    def to_dict(self) -> Dict[str, Any]:
        config = attrs.asdict(self.config)
        config["checks"] = list(config["checks"])
        return {
            "version": self.version,
            "config": config,
            "results": [result.to_dict() for result in self.results],
        }

    def to_json(self) -> str:
        """
        Serializes the report after validating it against the schema.

        Returns
        -------
        str :
            The JSON document
        """
        data = self.to_dict()
        jsonschema.validate(data, get_report_schema())
        return json.dumps(data, indent=4)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        """
        Parses and validates a report produced by `to_json`.

        Parameters
        ----------
        text : str
            The JSON document

        Returns
        -------
        Report :
            The parsed report

        Raises
        ------
        jsonschema.ValidationError :
            Raised when the document does not follow the report schema
        """
        data = json.loads(text)
        jsonschema.validate(data, get_report_schema())
        return cls(
            VerifyConfig(**data["config"]),
            [CheckResult(**result) for result in data["results"]],
            data["version"],
        )

    def to_text(self) -> str:
        """
        Renders results grouped by check, under the check descriptions.

        Returns
        -------
        str :
            Human-readable report
        """
        lines = []
        current = None
        for result in self.results:
            if result.check_id != current:
                current = result.check_id
                lines.append(f"[{current}] {CHECKS[current].description}")
            arity = "" if result.arity is None else f" n={result.arity}"
            lines.append(
                f"  {result.status} "
                f"{result.check_id}{arity} {result.subject} "
                f"expected={result.expected} actual={result.actual} "
                f"({result.runtime_ms} ms)"
            )
        passed = sum(result.passed for result in self.results)
        divergent = sum(result.divergent for result in self.results)
        failed = len(self.results) - passed - divergent
        lines.append(
            f"{passed} passed, {divergent} divergent, {failed} failed"
        )
        return "\n".join(lines)


@lru_cache(maxsize=None)
def get_report_schema() -> dict:
    """
    Returns the JSON schema of reports.

    Returns
    -------
    dict :
        The schema
    """
    text = files(schemas).joinpath("report_schema.json").read_text()
    return json.loads(text)


def run(config: VerifyConfig) -> Report:
    """
    Runs the selected checks.

    Parameters
    ----------
    config : VerifyConfig
        Settings of the run

    Returns
    -------
    Report :
        Results in registry order

    Raises
    ------
    VerifyUsageException :
        Raised for unknown check ids or settings below their minimum
    """
    lower_bounds = {
        "parallel": 1,
        "max_arity": 2,
        "quotient_max_arity": 3,
        "egf_order": 1,
        "samples": 0,
    }
    for name, bound in lower_bounds.items():
        if getattr(config, name) < bound:
            raise VerifyUsageException(
                f"{name} has to be at least {bound}, "
                f"got {getattr(config, name)}"
            )
    check_ids = resolve_checks(config.checks)
    arguments = [(check_id, config) for check_id in check_ids]
    if config.parallel > 1 and len(arguments) > 1:
        with Pool(min(config.parallel, len(arguments))) as pool:
            grouped = pool.map(_run_check_star, arguments)
    else:
        grouped = [_run_check_star(argument) for argument in arguments]
    results = [result for group in grouped for result in group]
    return Report(config, results)
