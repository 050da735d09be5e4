import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.services import catalog_service as catalog
from src.services import gamma_cat_service as gamma_cat
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.utils.errors import GammaForgeError, TruncationError


def _sum_labels(X, labels):
    arguments = [gamma_sets.element_index(X, 1, label) for label in labels]
    return {X.label(1, v) for v in hyper.sum_values(X, arguments)}


def test_quotient_binary_sums(q9):
    assert _sum_labels(q9, ["1", "2"]) == {"[0]"}
    assert _sum_labels(q9, ["0", "2"]) == {"[2]", "[5]", "[8]"}
    assert _sum_labels(q9, ["1", "0"]) == {"[1]", "[4]", "[7]"}


def test_ternary_sum_is_strictly_inside_iterated_sum(q9, idx):
    arguments = [idx(q9, "1"), idx(q9, "2"), idx(q9, "2")]
    result = hyper.nary_sum(q9, arguments)
    assert result.labels == ("[5]",)
    assert len(result.exhibits) == 1
    iterated = hyper.iterated_binary(q9, arguments, hyper.left_nested(3))
    assert {q9.label(1, v) for v in iterated} == {"[2]", "[5]", "[8]"}
    check = hyper.check_generalized_associativity(q9, arguments, [[1, 2], [3]])
    assert check.inclusion and not check.equality
    assert check.rhs == ("[2]", "[5]", "[8]")


def test_em_sums_are_strict(z6):
    H = gamma_sets.eilenberg_maclane(z6, 2)
    for a in range(6):
        for b in range(6):
            assert hyper.sum_values(H, [a, b]) == frozenset({(a + b) % 6})


def test_spherical_sums(sphere_ab):
    a, b = 1, 2
    assert hyper.nary_sum(sphere_ab, [a, b]).is_empty
    assert hyper.sum_values(sphere_ab, [a, 0]) == frozenset({a})


def test_arity_above_truncation(sphere_ab):
    with pytest.raises(TruncationError):
        hyper.sum_values(sphere_ab, [1, 1, 1])


def test_shapes():
    assert len(hyper.binary_shapes(3)) == 2
    assert len(hyper.binary_shapes(4)) == 5
    assert hyper.left_nested(3) == ((1, 2), 3)
    assert hyper.right_nested(3) == (1, (2, 3))


def test_iterated_binary_rejects_bad_shape(q9):
    with pytest.raises(GammaForgeError):
        hyper.iterated_binary(q9, [1, 2, 2], ((1, 1), 3))


@settings(max_examples=60, deadline=None)
@given(
    arguments=st.lists(st.integers(0, 6), min_size=3, max_size=3),
    blocks=st.sampled_from(gamma_cat.set_partitions(3)),
)
def test_generalized_associativity_on_quotient(q9, arguments, blocks):
    assert hyper.check_generalized_associativity(q9, arguments, blocks).inclusion


@settings(max_examples=30, deadline=None)
@given(arguments=st.lists(st.integers(0, 6), min_size=3, max_size=3))
def test_every_parenthesization_contains_the_ternary_sum(q9, arguments):
    total = hyper.sum_values(q9, arguments)
    for shape in hyper.binary_shapes(3):
        assert total <= hyper.iterated_binary(q9, arguments, shape)


def test_maps_preserve_sums_up_to_inclusion():
    z9 = catalog.cyclic_group(9)
    H = gamma_sets.eilenberg_maclane(z9, 2)
    _, projection = gamma_sets.collapse_projection(H, gamma_sets.em_subobject(z9, ["3", "6"], 2))
    outcome = hyper.check_preserves_sums(projection)
    assert outcome["checked"] == 81
    assert outcome["violations"] == []


def test_spherical_to_em_gives_strict_inclusion(z3):
    F = gamma_sets.eilenberg_maclane(z3, 2)
    ext = gamma_sets.spherical_map_from_level1((0, 1, 1), ("*", "a", "b"), F)
    outcome = hyper.check_preserves_sums(ext)
    assert outcome["violations"] == []
    assert {"arguments": ("a", "b"), "image": [], "sum": ["2"]} in outcome["strict"]


def test_higher_sums_of_additive_map(z6, z3):
    H = gamma_sets.eilenberg_maclane(z6, 3)
    outcome = hyper.check_higher_sums(H, z3, [a % 3 for a in range(6)])
    assert outcome["checked"] == 216
    assert outcome["violations"] == []


def test_named_tables():
    K = hyper.krasner()
    assert K.cell_labels(1, 1) == ["0", "1"]
    assert K.cell_labels(0, 1) == ["1"]
    S = hyper.sign_hyperfield()
    assert S.elements == ("0", "1", "-1")
    assert set(S.cell_labels(1, 2)) == {"0", "1", "-1"}
    assert S.cell_labels(1, 1) == ["1"]
    assert S.cell_labels(2, 2) == ["-1"]
    F = hyper.f_one_hyperfield()
    assert F.cell_labels(1, 1) == []
    assert F.cell_labels(0, 1) == ["1"]


def test_table_nary():
    assert hyper.krasner().hsum(1, 1) == frozenset({0, 1})
    assert hyper.table_nary(hyper.krasner(), [1, 1, 1]) == frozenset({0, 1})
    assert hyper.table_nary(hyper.f_one_hyperfield(), [1, 1, 0]) == frozenset()


@pytest.mark.parametrize("factory", [hyper.krasner, hyper.sign_hyperfield, hyper.f_one_hyperfield])
def test_plasma_embedding_round_trips_binary_table(factory):
    T = factory()
    P = hyper.plasma_embedding(T, 2)
    assert P.levels[1] == T.elements
    assert hyper.binary_sum_table(P).table == T.table
    assert gamma_sets.validate_functoriality(P).is_valid


def test_plasma_families_at_level_three():
    T = hyper.sign_hyperfield()
    P = hyper.plasma_embedding(T, 3)
    assert hyper.check_plasma_families(T, P).is_valid
    assert gamma_sets.validate_functoriality(P).is_valid


def test_plasma_embedding_requires_weak_unit(q9_level2):
    table = hyper.binary_sum_table(q9_level2)
    assert not table.unital
    with pytest.raises(GammaForgeError):
        hyper.plasma_embedding(table, 2)
