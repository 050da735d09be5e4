import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.models.gamma import GammaMorphism
from src.models.gamma_set import expected_morphism_count
from src.services import gamma_cat_service as gamma_cat
from src.utils.errors import CodecError, CompositionError, GammaForgeError, PartitionError


@st.composite
def morphism(draw, n, m):
    images = draw(st.lists(st.integers(0, m), min_size=n, max_size=n))
    return GammaMorphism.of(n, m, images)


@st.composite
def composable_chain(draw):
    n, m, k, l = (draw(st.integers(0, 3)) for _ in range(4))
    return draw(morphism(n, m)), draw(morphism(m, k)), draw(morphism(k, l))


def test_compose_applies_first_argument_first():
    swap = GammaMorphism.of(2, 2, (2, 1))
    assert gamma_cat.compose(swap, gamma_cat.projection(1, 2)) == gamma_cat.projection(2, 2)


def test_compose_rejects_mismatched_objects():
    with pytest.raises(CompositionError):
        gamma_cat.compose(gamma_cat.sum_morphism(2), gamma_cat.sum_morphism(2))


@given(composable_chain())
def test_composition_is_associative(chain):
    f, g, h = chain
    left = gamma_cat.compose(gamma_cat.compose(f, g), h)
    right = gamma_cat.compose(f, gamma_cat.compose(g, h))
    assert left == right


@given(st.integers(0, 3).flatmap(lambda n: st.integers(0, 3).flatmap(lambda m: morphism(n, m))))
def test_identity_laws(f):
    assert gamma_cat.compose(gamma_cat.identity(f.source.n), f) == f
    assert gamma_cat.compose(f, gamma_cat.identity(f.target.n)) == f


@pytest.mark.parametrize("n,m", [(0, 0), (1, 3), (2, 2), (3, 1), (3, 3)])
def test_enumerate_homs_count(n, m):
    homs = gamma_cat.enumerate_homs(n, m)
    assert len(homs) == (m + 1) ** n
    assert len(set(homs)) == len(homs)


def test_all_morphisms_count():
    assert len(gamma_cat.all_morphisms(2)) == expected_morphism_count(2) == 23


def test_distinguished_morphisms():
    assert gamma_cat.projection(2, 3).images == (0, 1, 0)
    assert gamma_cat.sum_morphism(3).images == (1, 1, 1)
    assert gamma_cat.inclusion(2, 3).images == (2,)
    with pytest.raises(GammaForgeError):
        gamma_cat.projection(4, 3)


def test_set_partitions_follow_bell_numbers():
    assert [len(gamma_cat.set_partitions(n)) for n in range(5)] == [1, 1, 2, 5, 15]
    assert gamma_cat.set_partitions(2) == [[[1, 2]], [[1], [2]]]


def test_partition_morphism():
    assert gamma_cat.partition_morphism([[1, 2], [3]]).images == (1, 1, 2)
    assert gamma_cat.partition_morphism([[2], [1, 3]]).images == (2, 1, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_partition_morphisms_split_sums_and_projections(n):
    for blocks in gamma_cat.set_partitions(n):
        m = len(blocks)
        f = gamma_cat.partition_morphism(blocks)
        assert gamma_cat.compose(f, gamma_cat.sum_morphism(m)) == gamma_cat.sum_morphism(n)
        for j, block in enumerate(blocks, start=1):
            collapsed = gamma_cat.compose(f, gamma_cat.projection(j, m))
            assert collapsed.images == tuple(int(i in block) for i in range(1, n + 1))


@pytest.mark.parametrize("blocks", [[[1], [1]], [[1], [3]], [[1], []]])
def test_partition_morphism_rejects_non_partitions(blocks):
    with pytest.raises(PartitionError):
        gamma_cat.partition_morphism(blocks)


def test_block_embedding():
    assert gamma_cat.block_embedding([3, 1], 3).images == (1, 0, 2)


def test_parse_morphism():
    assert gamma_cat.parse_morphism("2>1:[1,1]") == gamma_cat.sum_morphism(2)
    assert gamma_cat.parse_morphism("0>2:[]").source.n == 0
    with pytest.raises(CodecError):
        gamma_cat.parse_morphism("2->1")
    with pytest.raises(GammaForgeError):
        gamma_cat.parse_morphism("2>1:[3,0]")
