import pytest

from src.services import catalog_service as catalog
from src.services import gamma_set_service as gamma_sets
from src.services.sweep_service import quotient_by_subgroup


@pytest.fixture(scope="session")
def z2():
    return catalog.cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return catalog.cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return catalog.cyclic_group(4)


@pytest.fixture(scope="session")
def z6():
    return catalog.cyclic_group(6)


@pytest.fixture(scope="session")
def q9():
    """H(Z/9)/H({0,3,6}) up to level 3."""
    return quotient_by_subgroup(9, 3, 3)


@pytest.fixture(scope="session")
def q9_level2():
    return quotient_by_subgroup(9, 3, 2)


@pytest.fixture(scope="session")
def sphere_ab():
    return gamma_sets.spherical(("*", "a", "b"), 2)


@pytest.fixture
def idx():
    """Level-1 index of a label; quotient labels may omit the brackets."""
    return lambda X, label: gamma_sets.element_index(X, 1, label)
