import pytest
import sympy

from src.models.gamma_set import FiniteSemiring
from src.models.ring import FpRing
from src.services import abgrp_service as abgrp
from src.services import catalog_service as catalog
from src.services import gamma_set_service as gamma_sets
from src.services import scalars_service as scalars
from src.services.sweep_service import quotient_by_subgroup
from src.utils.errors import GammaForgeError, TruncationError, UnsupportedError


def _invariants(X):
    return abgrp.canonical_invariants(scalars.extend_module(X).group)


def test_f1_extends_to_the_integers():
    assert _invariants(gamma_sets.f1(2)) == (1, ())


@pytest.mark.parametrize("size", [2, 3, 4, 5])
def test_spherical_objects_are_free(size):
    labels = ["*"] + [f"y{i}" for i in range(1, size)]
    assert _invariants(gamma_sets.spherical(labels, 2)) == (size - 1, ())


@pytest.mark.parametrize(
    "monoid,expected",
    [
        (catalog.cyclic_group(2), (0, (2,))),
        (catalog.cyclic_group(4), (0, (4,))),
        (catalog.cyclic_group(6), (0, (6,))),
        (catalog.product_group(2, 2), (0, (2, 2))),
    ],
)
def test_em_objects_reflect_groups(monoid, expected):
    assert _invariants(gamma_sets.eilenberg_maclane(monoid, 2)) == expected


@pytest.mark.parametrize("monoid", [catalog.boolean_monoid(), catalog.saturating_monoid(3)])
def test_em_objects_of_monoids_give_group_completion(monoid):
    group = scalars.extend_module(gamma_sets.eilenberg_maclane(monoid, 2)).group
    assert abgrp.is_isomorphic(group, abgrp.group_completion(monoid))


@pytest.mark.parametrize("n,step,expected", [(9, 3, (0, (3,))), (8, 4, (0, (4,)))])
def test_quotients(n, step, expected):
    assert _invariants(quotient_by_subgroup(n, step, 2)) == expected


def test_unit_map_records(q9_level2):
    result = scalars.extend_module(q9_level2)
    assert result.relations[0].kind == "basepoint"
    assert all(record.kind == "additivity" for record in result.relations[1:])
    assert not any(result.iota[0])
    assert scalars.check_unit_map(result).is_valid
    sources = {s for record in result.relations for s in record.sources}
    assert ("[1]", "[2]", "[0]") in sources


def test_extend_module_needs_level_two():
    X = gamma_sets.f1(2)
    truncated = X.model_copy(update={"max_level": 1})
    with pytest.raises(TruncationError):
        scalars.extend_module(truncated)


def test_extend_map_identity(q9_level2):
    result = scalars.extend_module(q9_level2)
    induced = scalars.extend_map(gamma_sets.identity_map(q9_level2), result, result)
    assert abgrp.homs_equal(induced, abgrp.identity_hom(result.group))


def test_extend_map_of_quotient_is_surjective():
    z9 = catalog.cyclic_group(9)
    H = gamma_sets.eilenberg_maclane(z9, 2)
    _, projection = gamma_sets.collapse_projection(H, gamma_sets.em_subobject(z9, ["3", "6"], 2))
    matrix = abgrp.canonical_matrix(scalars.extend_map(projection))
    assert len(matrix) == 1 and len(matrix[0]) == 1
    assert matrix[0][0] % 3 != 0


def test_extend_map_is_functorial():
    z6, z3 = catalog.cyclic_group(6), catalog.cyclic_group(3)
    first = gamma_sets.eilenberg_maclane_map([a % 3 for a in range(6)], z6, z3, 2)
    second = gamma_sets.eilenberg_maclane_map((0, 2, 1), z3, z3, 2, source=first.target)
    composite = gamma_sets.compose_maps(first, second)
    assert abgrp.homs_equal(
        scalars.extend_map(composite),
        abgrp.compose_homs(scalars.extend_map(first), scalars.extend_map(second)),
    )


def test_algebra_constructors():
    mu2 = scalars.spherical_algebra(catalog.pointed_mu2(), 2)
    assert mu2.carrier.levels[1] == ("0", "1", "-1")
    assert mu2.unit == 1
    z6 = scalars.em_algebra(catalog.zn_ring(6), 2)
    assert z6.monoid.op(2, 3) == 0
    assert z6.unit == 1
    boolean = scalars.em_algebra(catalog.boolean_semiring(), 2)
    assert boolean.carrier.levels[1] == ("0", "1")
    assert scalars.underlying_monoid(mu2) is mu2.monoid


def test_f1_algebra_extends_to_the_integers():
    result = scalars.extend_algebra(scalars.spherical_algebra(catalog.pointed_f1(), 2))
    assert abgrp.canonical_invariants(result.group) == (1, ())
    assert scalars.rings_isomorphic(result.ring, scalars.monoid_ring(catalog.pointed_f1()))


def test_mu2_algebra_extends_to_group_ring():
    result = scalars.extend_algebra(scalars.spherical_algebra(catalog.pointed_mu2(), 2))
    ring = result.ring
    assert abgrp.canonical_invariants(ring.additive) == (2, ())
    minus_one = (0, 0, 1)
    assert abgrp.reduce(ring.additive, ring.multiply(minus_one, minus_one)) == abgrp.reduce(
        ring.additive, (0, 1, 0)
    )
    assert not result.saturation_added


def test_em_algebra_extends_to_the_ring():
    result = scalars.extend_algebra(scalars.em_algebra(catalog.zn_ring(6), 2))
    assert abgrp.canonical_invariants(result.group) == (0, (6,))
    assert scalars.ring_axioms(result.ring).is_valid
    assert scalars.rings_isomorphic(result.ring, scalars.ring_completion(catalog.zn_ring(6)))


def test_boolean_semiring_extends_to_zero_ring():
    result = scalars.extend_algebra(scalars.em_algebra(catalog.boolean_semiring(), 2))
    assert abgrp.canonical_invariants(result.group) == (0, ())


def test_quotient_algebra():
    A = scalars.quotient_algebra(catalog.zn_ring(9), ["3", "6"], 2)
    assert A.carrier.levels[1] == ("[0]", "[1]", "[2]", "[4]", "[5]", "[7]", "[8]")
    result = scalars.extend_algebra(A)
    assert abgrp.canonical_invariants(result.group) == (0, (3,))
    assert scalars.rings_isomorphic(result.ring, scalars.ring_completion(catalog.zn_ring(3)))


def test_quotient_algebra_rejects_non_ideal():
    with pytest.raises(GammaForgeError):
        scalars.quotient_algebra(catalog.zn_ring(9), ["3"], 2)


def test_monoid_ring():
    assert abgrp.canonical_invariants(scalars.monoid_ring(catalog.pointed_f1()).additive) == (1, ())
    assert abgrp.canonical_invariants(scalars.monoid_ring(catalog.pointed_cyclic(3)).additive) == (3, ())
    assert scalars.ring_axioms(scalars.monoid_ring(catalog.pointed_cyclic(3))).is_valid


@pytest.mark.parametrize(
    "monoid",
    [
        catalog.pointed_f1(),
        catalog.pointed_mu2(),
        catalog.pointed_cyclic(2),
        catalog.pointed_cyclic(3),
        catalog.get_pointed_monoid("z4mul"),
    ],
    ids=lambda M: M.name,
)
def test_spherical_algebra_extends_to_monoid_ring(monoid):
    result = scalars.extend_algebra(scalars.spherical_algebra(monoid, 2))
    assert scalars.rings_isomorphic(result.ring, scalars.monoid_ring(monoid))


def _f2_pairs(name: str, mul, one: int) -> FiniteSemiring:
    """A ring structure on F2 x F2 (as an additive group) given by `mul` on pairs."""
    pairs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    index = {p: i for i, p in enumerate(pairs)}
    return FiniteSemiring(
        name=name,
        elements=("00", "10", "01", "11"),
        add=tuple(tuple(index[((p[0] + q[0]) % 2, (p[1] + q[1]) % 2)] for q in pairs) for p in pairs),
        mul=tuple(tuple(index[mul(p, q)] for q in pairs) for p in pairs),
        one=one,
    )


def test_rings_isomorphic_distinguishes_same_additive_group():
    product = _f2_pairs("F2xF2", lambda p, q: (p[0] * q[0], p[1] * q[1]), one=3)
    dual = _f2_pairs("F2[e]", lambda p, q: (p[0] * q[0] % 2, (p[0] * q[1] + p[1] * q[0]) % 2), one=1)
    S, T = scalars.ring_completion(product), scalars.ring_completion(dual)
    assert abgrp.is_isomorphic(S.additive, T.additive)
    assert scalars.rings_isomorphic(S, S)
    assert not scalars.rings_isomorphic(S, T)


def test_rings_isomorphic_rejects_large_rank():
    ring = scalars.monoid_ring(catalog.pointed_cyclic(5))
    with pytest.raises(UnsupportedError):
        scalars.rings_isomorphic(ring, ring)


def _rebased_product_ring(basis) -> FpRing:
    """Z^k with coordinatewise product, presented on the unimodular basis `basis`."""
    B_inv = sympy.Matrix(basis).inv()

    def coords(vector):
        return tuple(int(x) for x in sympy.Matrix([list(vector)]) * B_inv)

    products = tuple(
        tuple(coords([a * b for a, b in zip(ci, cj)]) for cj in basis) for ci in basis
    )
    generators = [f"c{i}" for i in range(len(basis))]
    return FpRing(
        name=f"Z^{len(basis)}",
        additive=abgrp.presentation(generators, []),
        products=products,
        unit=coords([1] * len(basis)),
    )


def test_free_rank_two_isomorphism_needs_no_small_entries():
    S = _rebased_product_ring([[1, 0], [0, 1]])
    T = _rebased_product_ring([[1, 2], [0, 1]])
    assert scalars.ring_axioms(T).is_valid
    assert scalars.rings_isomorphic(S, T)


def test_free_rank_two_discriminant_separates_rings():
    S = _rebased_product_ring([[1, 0], [0, 1]])
    dual = FpRing(
        name="Z[e]",
        additive=abgrp.presentation(["1", "e"], []),
        products=(((1, 0), (0, 1)), ((0, 1), (0, 0))),
        unit=(1, 0),
    )
    assert not scalars.rings_isomorphic(S, dual)


def test_free_rank_three_inconclusive_search_raises():
    S = _rebased_product_ring([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    T = _rebased_product_ring([[1, 5, 0], [0, 1, 5], [0, 0, 1]])
    assert scalars.ring_axioms(T).is_valid
    with pytest.raises(UnsupportedError):
        scalars.rings_isomorphic(S, T)
