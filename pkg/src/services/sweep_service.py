"""Property sweeps over a fixed corpus of Γ-sets, matrices and adjunction instances."""

import logging
from itertools import product

import numpy as np

from config.settings import DEFAULT_SEED, SWEEP_TUPLE_CAP
from src.models.abelian import IntMatrix
from src.models.gamma_set import TruncatedGammaSet
from src.services import abgrp_service as abgrp
from src.services import adjunction_service as adjunction
from src.services import catalog_service as catalog
from src.services import gamma_cat_service as gamma_cat
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.services import scalars_service as scalars

logger = logging.getLogger(__name__)


def quotient_by_subgroup(n: int, step: int, max_level: int) -> TruncatedGammaSet:
    """H(Z/n)/H(step·Z/n)."""
    M = catalog.cyclic_group(n)
    subset = [str(a) for a in range(0, n, step)]
    H = gamma_sets.eilenberg_maclane(M, max_level)
    return gamma_sets.collapse_quotient(
        H, gamma_sets.em_subobject(M, subset, max_level), f"H(Z/{n})/H({{{','.join(subset)}}})"
    )


def default_corpus(max_level: int = 2) -> dict[str, TruncatedGammaSet]:
    """Fifteen named Γ-sets covering every construction."""
    em = lambda M: gamma_sets.eilenberg_maclane(M, max_level)  # noqa: E731
    plasma_level = min(max_level, 3)
    corpus = {
        "f1": gamma_sets.f1(max_level),
        "S{*,a,b}": gamma_sets.spherical(("*", "a", "b"), max_level),
        "S{*,a,b,c}": gamma_sets.spherical(("*", "a", "b", "c"), max_level),
        "H(Z/2)": em(catalog.cyclic_group(2)),
        "H(Z/3)": em(catalog.cyclic_group(3)),
        "H(Z/4)": em(catalog.cyclic_group(4)),
        "H(Z/6)": em(catalog.cyclic_group(6)),
        "H(Z/2+Z/2)": em(catalog.product_group(2, 2)),
        "H(bool)": em(catalog.boolean_monoid()),
        "H(sat3)": em(catalog.saturating_monoid(3)),
        "Q9": quotient_by_subgroup(9, 3, max_level),
        "Q8": quotient_by_subgroup(8, 4, max_level),
        "P(K)": hyper.plasma_embedding(hyper.krasner(), plasma_level),
        "P(S)": hyper.plasma_embedding(hyper.sign_hyperfield(), plasma_level),
        "P(F)": hyper.plasma_embedding(hyper.f_one_hyperfield(), plasma_level),
    }
    return corpus


def _sample_tuples(k: int, arity: int, cap: int, rng: np.random.Generator):
    total = k**arity
    if total <= cap:
        return list(product(range(k), repeat=arity))
    chosen = np.sort(rng.choice(total, size=cap, replace=False))
    # decode with the first coordinate most significant
    digits = (chosen[:, None] // k ** np.arange(arity - 1, -1, -1)) % k
    return [tuple(int(x) for x in row) for row in digits]


def associativity_sweep(
    corpus: dict[str, TruncatedGammaSet],
    seed: int = DEFAULT_SEED,
    cap: int = SWEEP_TUPLE_CAP,
    max_arity: int = 3,
) -> list[dict]:
    """Generalized associativity on every tuple (sampled above `cap`) and every partition."""
    rng = np.random.default_rng(seed)
    rows = []
    for name, X in corpus.items():
        tuples = 0
        checked = 0
        strict = 0
        violations = []
        for arity in range(2, min(max_arity, X.max_level) + 1):
            partitions = gamma_cat.set_partitions(arity)
            for arguments in _sample_tuples(X.size(1), arity, cap, rng):
                tuples += 1
                for partition in partitions:
                    check = hyper.check_generalized_associativity(X, arguments, partition)
                    checked += 1
                    if not check.inclusion:
                        violations.append({"arguments": check.arguments, "partition": check.partition})
                    elif not check.equality:
                        strict += 1
        rows.append(
            {
                "object": name,
                "tuples": tuples,
                "checked": checked,
                "strict": strict,
                "violations": violations,
            }
        )
        logger.info("%s: %d checks, %d strict, %d violations", name, checked, strict, len(violations))
    return rows


def snf_sweep(
    count: int = 1000, max_size: int = 6, bound: int = 20, seed: int = DEFAULT_SEED
) -> dict:
    """Smith form self-verification on seeded random integer matrices."""
    rng = np.random.default_rng(seed)
    failures = []
    for i in range(count):
        rows, cols = (int(x) for x in rng.integers(1, max_size + 1, size=2))
        entries = rng.integers(-bound, bound + 1, size=(rows, cols))
        matrix = IntMatrix.from_rows(entries.tolist(), cols=cols)
        check = abgrp.verify_smith_form(matrix, abgrp.smith_normal_form(matrix))
        if not check.is_valid:
            failures.append({"index": i, "matrix": matrix.to_lists(), "errors": check.errors})
    return {"checked": count, "failures": failures}


def module_adjunction_grid(max_level: int = 2) -> list[tuple[str, TruncatedGammaSet, object]]:
    corpus = default_corpus(max_level)
    z = catalog.cyclic_group
    pairs = [
        ("f1", z(2)), ("f1", z(3)), ("H(Z/6)", z(4)), ("H(Z/2)", z(2)), ("H(Z/4)", z(2)),
        ("Q9", z(3)), ("Q8", z(2)), ("S{*,a,b}", z(2)), ("S{*,a,b}", z(3)), ("H(bool)", z(2)),
        ("H(Z/2+Z/2)", z(2)), ("P(K)", z(2)),
    ]
    return [(name, corpus[name], M) for name, M in pairs]


def algebra_adjunction_grid(max_level: int = 2) -> list[tuple]:
    """(algebra, target ring, expected number of maps)."""
    z = catalog.zn_ring
    return [
        (scalars.spherical_algebra(catalog.pointed_f1(), max_level), z(5), 1),
        (scalars.spherical_algebra(catalog.pointed_mu2(), max_level), z(5), 2),
        (scalars.em_algebra(z(6), max_level), z(6), 1),
        (scalars.spherical_algebra(catalog.pointed_mu2(), max_level), z(3), 2),
        (scalars.em_algebra(z(4), max_level), z(2), 1),
        (scalars.spherical_algebra(catalog.pointed_cyclic(3), max_level), z(7), 3),
        (scalars.em_algebra(catalog.boolean_semiring(), max_level), z(2), 0),
        (scalars.quotient_algebra(z(9), ["3", "6"], max_level), z(3), 1),
    ]


def module_adjunction_sweep(max_level: int = 2, guard: int | None = None) -> list[dict]:
    kwargs = {"guard": guard} if guard else {}
    rows = []
    for name, X, M in module_adjunction_grid(max_level):
        report = adjunction.verify_module_adjunction(X, M, **kwargs)
        rows.append({"object": name, **report.model_dump(), "passed": report.passed})
    return rows


def algebra_adjunction_sweep(max_level: int = 2, guard: int | None = None) -> list[dict]:
    kwargs = {"guard": guard} if guard else {}
    rows = []
    for A, R, expected in algebra_adjunction_grid(max_level):
        report = adjunction.verify_algebra_adjunction(A, R, **kwargs)
        rows.append(
            {
                **report.model_dump(),
                "expected": expected,
                "passed": report.passed and report.left_count == expected,
            }
        )
    return rows
