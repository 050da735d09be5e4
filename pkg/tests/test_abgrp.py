import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.abelian import IntMatrix
from src.services import abgrp_service as abgrp
from src.services import catalog_service as catalog
from src.utils.errors import GuardExceededError


def _matrix(rows):
    return IntMatrix.from_rows(rows)


def test_snf_of_a_row():
    form = abgrp.smith_normal_form(_matrix([[4, 6]]))
    assert form.d.to_lists() == [[2, 0]]
    assert abgrp.verify_smith_form(_matrix([[4, 6]]), form).is_valid


def test_snf_divisibility_chain():
    matrix = _matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    form = abgrp.smith_normal_form(matrix)
    assert form.diagonal == (2, 6, 12)
    assert abgrp.verify_smith_form(matrix, form).is_valid


def test_snf_of_empty_and_zero_matrices():
    assert abgrp.smith_normal_form(IntMatrix.from_rows([], cols=3)).d.rows == 0
    assert abgrp.smith_normal_form(_matrix([[0, 0], [0, 0]])).diagonal == (0, 0)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda rows: st.integers(1, 5).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(-20, 20), min_size=cols, max_size=cols),
                min_size=rows,
                max_size=rows,
            )
        )
    )
)
def test_snf_verifies_on_random_matrices(rows):
    matrix = _matrix(rows)
    assert abgrp.verify_smith_form(matrix, abgrp.smith_normal_form(matrix)).is_valid


def test_verify_smith_form_detects_wrong_diagonal():
    matrix = _matrix([[4, 6]])
    form = abgrp.smith_normal_form(matrix)
    tampered = form.model_copy(update={"d": _matrix([[4, 0]])})
    assert not abgrp.verify_smith_form(matrix, tampered).is_valid


def test_canonical_invariants():
    assert abgrp.canonical_invariants(abgrp.presentation(("a", "b"), [[2, 0], [0, 3]])) == (0, (6,))
    assert abgrp.canonical_invariants(abgrp.cyclic(0)) == (1, ())
    assert abgrp.canonical_invariants(abgrp.direct_sum(abgrp.cyclic(2), abgrp.cyclic(2))) == (0, (2, 2))
    assert abgrp.canonical_invariants(abgrp.presentation(("a", "b", "c"), [[1, 1, 0]])) == (2, ())


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4),
    st.permutations(range(3)),
    st.randoms(use_true_random=False),
)
def test_invariants_ignore_generator_and_relation_order(rows, perm, rnd):
    generators = ("a", "b", "c")
    shuffled = [tuple(row[p] for p in perm) for row in rows]
    rnd.shuffle(shuffled)
    G = abgrp.presentation(generators, rows)
    H = abgrp.presentation(tuple(generators[p] for p in perm), shuffled)
    assert abgrp.canonical_invariants(G) == abgrp.canonical_invariants(H)


def test_group_order_and_elements():
    G = abgrp.direct_sum(abgrp.cyclic(2), abgrp.cyclic(3))
    assert abgrp.group_order(G) == 6
    assert len(abgrp.elements(G)) == 6
    assert abgrp.group_order(abgrp.cyclic(0)) is None


def test_reduce_and_contains():
    G = abgrp.presentation(("a",), [[6]])
    assert abgrp.contains(G, (12,))
    assert not abgrp.contains(G, (3,))
    assert abgrp.reduce(G, (7,)) == abgrp.reduce(G, (1,))


def test_is_isomorphic():
    assert abgrp.is_isomorphic(abgrp.cyclic(6), abgrp.direct_sum(abgrp.cyclic(2), abgrp.cyclic(3)))
    assert not abgrp.is_isomorphic(abgrp.cyclic(4), abgrp.direct_sum(abgrp.cyclic(2), abgrp.cyclic(2)))


def test_hom_to_finite():
    assert len(abgrp.hom_to_finite(abgrp.cyclic(6), catalog.cyclic_group(4))) == 2
    assert len(abgrp.hom_to_finite(abgrp.cyclic(0), catalog.cyclic_group(5))) == 5
    assert abgrp.hom_to_finite(abgrp.cyclic(3), catalog.cyclic_group(2)) == [(0,)]
    with pytest.raises(GuardExceededError):
        abgrp.hom_to_finite(abgrp.cyclic(0), catalog.cyclic_group(5), guard=4)


@pytest.mark.parametrize(
    "monoid,expected",
    [
        (catalog.cyclic_group(4), (0, (4,))),
        (catalog.product_group(2, 2), (0, (2, 2))),
        (catalog.boolean_monoid(), (0, ())),
        (catalog.saturating_monoid(3), (0, ())),
    ],
)
def test_group_completion(monoid, expected):
    assert abgrp.canonical_invariants(abgrp.group_completion(monoid)) == expected


def test_hom_composition():
    G = abgrp.cyclic(6)
    ident = abgrp.identity_hom(G)
    assert abgrp.homs_equal(abgrp.compose_homs(ident, ident), ident)
    assert abgrp.check_well_defined(ident).is_valid


def test_format_invariants():
    assert abgrp.format_invariants(abgrp.cyclic(0)) == "Z"
    assert "Z/6" in abgrp.format_invariants(abgrp.cyclic(6))
