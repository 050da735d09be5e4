import pytest

from config.settings import EXAMPLES_DIR
from src.models.report import ConstructionDescriptor
from src.services import catalog_service as catalog
from src.services import construction_service as constructions
from src.utils.errors import GammaForgeError, GuardExceededError, UnknownNameError


@pytest.mark.parametrize(
    "name,size",
    [("z6", 6), ("Z/4", 4), ("z2xz2", 4), ("bool", 2), ("sat3", 3)],
)
def test_get_monoid(name, size):
    assert catalog.get_monoid(name).size == size


def test_pointed_monoids_by_name():
    assert catalog.get_pointed_monoid("mu2") == catalog.pointed_mu2()
    assert catalog.get_pointed_monoid("c3").elements == ("0", "1", "t", "t2")
    z4mul = catalog.get_pointed_monoid("z4mul")
    assert z4mul.op(2, 2) == 0 and z4mul.zero == 0


def test_unknown_names():
    with pytest.raises(UnknownNameError):
        catalog.get_monoid("nope")
    with pytest.raises(UnknownNameError):
        catalog.get_semiring("z")
    with pytest.raises(UnknownNameError):
        constructions.resolve_table("tropical")


def test_zn_ring_needs_two_elements():
    with pytest.raises(GammaForgeError):
        catalog.zn_ring(1)


def test_build_collapse():
    descriptor = ConstructionDescriptor(kind="collapse", max_level=2, monoid="z9", subobject=("0", "3", "6"))
    X = constructions.build_gamma_set(descriptor)
    assert X.name == "H(Z/9)/H({0,3,6})"
    assert X.size(1) == 7


def test_build_from_files():
    X = constructions.build_gamma_set(
        ConstructionDescriptor(kind="file", max_level=2, file=str(EXAMPLES_DIR / "f1_level2.json"))
    )
    assert X.levels[1] == ("0", "1")
    M = constructions.resolve_pointed_monoid(str(EXAMPLES_DIR / "mu2_pointed.json"))
    assert M.elements[0] == "0"


def test_build_algebra():
    algebra = constructions.build_algebra(
        ConstructionDescriptor(kind="em", max_level=2, monoid="z6", algebra=True)
    )
    assert algebra.name == "H(Z/6)"
    with pytest.raises(UnknownNameError):
        constructions.build_algebra(ConstructionDescriptor(kind="spherical", max_level=2, pointed_set=("*", "a")))


def test_descriptor_rejects_missing_parameters():
    with pytest.raises(ValueError):
        ConstructionDescriptor(kind="collapse", monoid="z9")
    with pytest.raises(ValueError):
        ConstructionDescriptor(kind="plasma", table="sign", algebra=True)


def test_descriptor_guard_limits_construction():
    descriptor = ConstructionDescriptor(kind="em", max_level=2, monoid="z6", guard=5)
    with pytest.raises(GuardExceededError):
        constructions.build_gamma_set(descriptor)
    with pytest.raises(GuardExceededError):
        constructions.build_algebra(descriptor.model_copy(update={"algebra": True}))
