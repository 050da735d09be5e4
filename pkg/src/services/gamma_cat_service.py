"""The category Γ^op: pointed maps n+ -> m+, composition and the distinguished morphisms."""

import logging
from functools import lru_cache
from itertools import product

from config.settings import ENUMERATION_GUARD
from src.models.gamma import GammaMorphism
from src.utils.errors import CompositionError, GammaForgeError, GuardExceededError, PartitionError
from src.utils.text_processing import decode_morphism

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def identity(n: int) -> GammaMorphism:
    return GammaMorphism.of(n, n, range(1, n + 1))


def compose(f: GammaMorphism, g: GammaMorphism) -> GammaMorphism:
    """Return g∘f (apply f first)."""
    if f.target != g.source:
        raise CompositionError(f"Nao e possivel compor {f.key} com {g.key}: {f.target} != {g.source}")
    return GammaMorphism.of(f.source.n, g.target.n, (g(f(i)) for i in range(1, f.source.n + 1)))


@lru_cache(maxsize=None)
def projection(i: int, n: int) -> GammaMorphism:
    """p_{i,n}: n+ -> 1+, sending i to 1 and everything else to 0."""
    if not 1 <= i <= n:
        raise GammaForgeError(f"Projecao p_{i},{n} fora do intervalo 1..{n}")
    return GammaMorphism.of(n, 1, (int(j == i) for j in range(1, n + 1)))


@lru_cache(maxsize=None)
def sum_morphism(n: int) -> GammaMorphism:
    return GammaMorphism.of(n, 1, (1,) * n)


@lru_cache(maxsize=None)
def inclusion(i: int, n: int) -> GammaMorphism:
    """1+ -> n+ sending 1 to i."""
    if not 1 <= i <= n:
        raise GammaForgeError(f"Inclusao na coordenada {i} fora de 1..{n}")
    return GammaMorphism.of(1, n, (i,))


def _check_partition(blocks) -> int:
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise PartitionError("Particao com bloco vazio")
        for i in block:
            if i in seen:
                raise PartitionError(f"Elemento {i} aparece em mais de um bloco")
            seen.add(i)
    n = len(seen)
    if seen != set(range(1, n + 1)):
        raise PartitionError(f"Blocos nao cobrem {{1..{n}}}: {sorted(seen)}")
    return n


def partition_morphism(blocks) -> GammaMorphism:
    """f: n+ -> m+ with f(i) = j iff i lies in the j-th block."""
    blocks = [list(block) for block in blocks]
    n = _check_partition(blocks)
    images = [0] * n
    for j, block in enumerate(blocks, start=1):
        for i in block:
            images[i - 1] = j
    return GammaMorphism.of(n, len(blocks), images)


def block_embedding(block, n: int) -> GammaMorphism:
    """n+ -> k+ numbering the elements of `block` 1..k in increasing order, others to 0."""
    ordered = sorted(block)
    if any(not 1 <= i <= n for i in ordered):
        raise PartitionError(f"Bloco {ordered} fora de 1..{n}")
    position = {i: k for k, i in enumerate(ordered, start=1)}
    return GammaMorphism.of(n, len(ordered), (position.get(i, 0) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def _homs(n: int, m: int) -> tuple[GammaMorphism, ...]:
    return tuple(GammaMorphism.of(n, m, images) for images in product(range(m + 1), repeat=n))


def enumerate_homs(n: int, m: int, guard: int = ENUMERATION_GUARD) -> list[GammaMorphism]:
    """All (m+1)^n pointed maps n+ -> m+, lexicographic in the images."""
    count = (m + 1) ** n
    if count > guard:
        raise GuardExceededError(f"Hom({n}+, {m}+)", count, guard)
    return list(_homs(n, m))


def all_morphisms(max_level: int, guard: int = ENUMERATION_GUARD) -> list[GammaMorphism]:
    """Every morphism between objects of level <= max_level, grouped by (source, target)."""
    morphisms = []
    for n in range(max_level + 1):
        for m in range(max_level + 1):
            morphisms.extend(enumerate_homs(n, m, guard))
    logger.debug("Gamma^op truncated at %d has %d morphisms", max_level, len(morphisms))
    return morphisms


def set_partitions(n: int) -> list[list[list[int]]]:
    """All partitions of {1..n}; blocks ordered by their least element."""
    if n == 0:
        return [[]]
    result = []
    for partial in set_partitions(n - 1):
        for k in range(len(partial)):
            result.append([block + [n] if j == k else list(block) for j, block in enumerate(partial)])
        result.append([list(block) for block in partial] + [[n]])
    return result


def parse_morphism(text: str) -> GammaMorphism:
    source, target, images = decode_morphism(text)
    try:
        return GammaMorphism.of(source, target, images)
    except ValueError as exc:
        raise GammaForgeError(f"Morfismo invalido '{text}': {exc}") from exc
