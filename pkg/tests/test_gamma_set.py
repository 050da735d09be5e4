import pytest
from pydantic import ValidationError

from src.models.gamma import GammaMorphism
from src.models.gamma_set import GammaMap, PointedMonoid, TruncatedGammaSet
from src.services import catalog_service as catalog
from src.services import gamma_set_service as gamma_sets
from src.utils.errors import GammaForgeError, GammaSetValidationError, NonAdditiveMapError


def test_em_level_sizes(z3):
    H = gamma_sets.eilenberg_maclane(z3, 3)
    assert [H.size(n) for n in range(4)] == [1, 3, 9, 27]
    assert H.levels[2][:3] == ("(0,0)", "(0,1)", "(0,2)")


def test_em_rejects_pointed_monoid():
    with pytest.raises(GammaForgeError):
        gamma_sets.eilenberg_maclane(catalog.pointed_mu2(), 2)


def test_spherical_labels(sphere_ab):
    assert sphere_ab.levels[1] == ("*", "a", "b")
    assert sphere_ab.levels[2] == ("*", "(a,1)", "(b,1)", "(a,2)", "(b,2)")


def test_f1_is_the_identity_functor():
    F = gamma_sets.f1(2)
    for f in F.action:
        assert F.action[f] == (0,) + f.images


@pytest.mark.parametrize(
    "build",
    [
        lambda: gamma_sets.f1(3),
        lambda: gamma_sets.terminal(2),
        lambda: gamma_sets.spherical(("*", "a", "b"), 3),
        lambda: gamma_sets.eilenberg_maclane(catalog.cyclic_group(3), 3),
        lambda: gamma_sets.eilenberg_maclane(catalog.boolean_monoid(), 3),
        lambda: gamma_sets.eilenberg_maclane(catalog.product_group(2, 2), 2),
    ],
)
def test_constructions_are_functors(build):
    assert gamma_sets.validate_functoriality(build()).is_valid


def test_swapped_action_entries_break_functoriality():
    F = gamma_sets.f1(2)
    swap = GammaMorphism.of(2, 2, (2, 1))
    action = dict(F.action)
    action[swap] = (0, 1, 2)
    broken = TruncatedGammaSet(name="F1 trocado", max_level=2, levels=F.levels, action=action)
    report = gamma_sets.validate_functoriality(broken)
    assert not report.is_valid
    assert any(swap.key in error for error in report.errors)


def test_quotient_is_a_functor(q9):
    assert gamma_sets.validate_functoriality(q9).is_valid
    assert q9.levels[1] == ("[0]", "[1]", "[2]", "[4]", "[5]", "[7]", "[8]")


def test_collapse_projection_is_natural():
    M = catalog.cyclic_group(9)
    H = gamma_sets.eilenberg_maclane(M, 2)
    quotient, projection = gamma_sets.collapse_projection(H, gamma_sets.em_subobject(M, ["3", "6"], 2))
    assert gamma_sets.validate_naturality(projection).is_valid
    assert projection.level1() == (0, 1, 2, 0, 3, 4, 0, 5, 6)


def test_collapse_rejects_non_subobject():
    M = catalog.cyclic_group(9)
    H = gamma_sets.eilenberg_maclane(M, 2)
    with pytest.raises(GammaSetValidationError) as info:
        gamma_sets.collapse_quotient(H, gamma_sets.em_subobject(M, ["3"], 2))
    assert info.value.morphism is not None


def test_collapse_by_basepoint_keeps_every_level(sphere_ab):
    quotient, projection = gamma_sets.collapse_projection(
        sphere_ab, gamma_sets.basepoint_selection(sphere_ab)
    )
    assert [quotient.size(n) for n in range(3)] == [1, 3, 5]
    assert quotient.levels[1] == ("[*]", "[a]", "[b]")
    assert projection.level1() == (0, 1, 2)


def test_collapse_by_everything_is_trivial(z3):
    H = gamma_sets.eilenberg_maclane(z3, 2)
    quotient, projection = gamma_sets.collapse_projection(H, gamma_sets.full_selection(H))
    assert [quotient.size(n) for n in range(3)] == [1, 1, 1]
    assert projection.level1() == (0, 0, 0)


def test_act_reads_the_action_table(sphere_ab):
    for f in sphere_ab.action:
        assert [sphere_ab.act(f, x) for x in range(sphere_ab.size(f.source.n))] == list(
            sphere_ab.table(f)
        )


def test_gamma_map_from_additive_assignment(z6, z2):
    H = gamma_sets.eilenberg_maclane(z6, 2)
    phi = gamma_sets.gamma_map_from_level1([a % 2 for a in range(6)], H, z2)
    assert gamma_sets.validate_naturality(phi).is_valid
    assert phi.components[2][gamma_sets.element_index(H, 2, "(3,4)")] == 2


def test_non_additive_assignment_is_rejected(z3):
    H = gamma_sets.eilenberg_maclane(z3, 2)
    with pytest.raises(NonAdditiveMapError) as info:
        gamma_sets.gamma_map_from_level1((0, 1, 1), H, z3)
    assert info.value.triple == ("1", "1", "2")
    assert not gamma_sets.is_natural(gamma_sets.projection_extension((0, 1, 1), H, z3))


def test_eilenberg_maclane_map(z4, z2):
    hu = gamma_sets.eilenberg_maclane_map((0, 1, 0, 1), z4, z2, 2)
    assert gamma_sets.is_natural(hu)
    with pytest.raises(NonAdditiveMapError):
        gamma_sets.eilenberg_maclane_map((0, 1, 0, 0), z4, z2, 2)


def test_spherical_map_extends_pointed_map(z3):
    F = gamma_sets.eilenberg_maclane(z3, 2)
    ext = gamma_sets.spherical_map_from_level1((0, 1, 2), ("*", "a", "b"), F)
    assert gamma_sets.validate_naturality(ext).is_valid
    assert ext.level1() == (0, 1, 2)


def test_identity_and_composition(sphere_ab):
    ident = gamma_sets.identity_map(sphere_ab)
    assert gamma_sets.compose_maps(ident, ident).same_components(ident)


def test_naturality_failure_is_reported(z3):
    H = gamma_sets.eilenberg_maclane(z3, 2)
    swapped = list(range(9))
    swapped[1], swapped[2] = swapped[2], swapped[1]
    bad = GammaMap(
        source=H,
        target=H,
        components=((0,), (0, 2, 1), tuple(swapped)),
    )
    result = gamma_sets.validate_naturality(bad)
    assert not result.is_valid


def test_element_index_accepts_bare_quotient_labels(q9):
    assert gamma_sets.element_index(q9, 1, "1") == gamma_sets.element_index(q9, 1, "[1]") == 1
    with pytest.raises(GammaForgeError):
        gamma_sets.element_index(q9, 1, "3")


def test_incomplete_action_table_is_invalid():
    F = gamma_sets.f1(2)
    action = dict(list(F.action.items())[:-1])
    with pytest.raises(ValidationError):
        TruncatedGammaSet(name="broken", max_level=2, levels=F.levels, action=action)


def test_pointed_monoid_requires_basepoint_first():
    with pytest.raises(ValidationError):
        PointedMonoid(elements=("1", "0"), table=((0, 1), (1, 1)), unit=0, zero=1)


def test_monoid_arithmetic(z6):
    assert z6.is_group()
    assert z6.inverse(2) == 4
    assert z6.multiple(-1, 1) == 5
    assert z6.total([1, 2, 4]) == 1
    assert not catalog.boolean_monoid().is_group()
