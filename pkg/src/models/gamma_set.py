import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from src.models.gamma import GammaMorphism
from src.utils.validators import validate_distributivity, validate_operation_table


def expected_morphism_count(max_level: int) -> int:
    """Number of pointed maps n+ -> m+ with n, m <= max_level."""
    return sum((m + 1) ** n for n in range(max_level + 1) for m in range(max_level + 1))


class TruncatedGammaSet(BaseModel):
    """A Γ-set restricted to levels 0..max_level with a fully materialized action table.

    levels[n] lists the labels of X(n+), basepoint first. action[f] is the
    function X(f) as a tuple of target indices, one per source element.
    Functoriality is not enforced here; see gamma_set_service.validate_functoriality.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    max_level: int = Field(ge=2)
    levels: tuple[tuple[str, ...], ...]
    action: dict[GammaMorphism, tuple[int, ...]]

    _arrays: dict = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_structure(self):
        if len(self.levels) != self.max_level + 1:
            raise ValueError(f"Esperados {self.max_level + 1} niveis, recebidos {len(self.levels)}")
        if len(self.levels[0]) != 1:
            raise ValueError("O nivel 0 deve ser o conjunto unitario {basepoint}")
        for n, labels in enumerate(self.levels):
            if not labels:
                raise ValueError(f"Nivel {n} vazio")
            if len(set(labels)) != len(labels):
                raise ValueError(f"Rotulos repetidos no nivel {n}")
        for f, table in self.action.items():
            n, m = f.source.n, f.target.n
            if n > self.max_level or m > self.max_level:
                raise ValueError(f"Morfismo {f.key} acima do nivel maximo {self.max_level}")
            if len(table) != len(self.levels[n]):
                raise ValueError(f"Tabela de {f.key} tem {len(table)} entradas, esperadas {len(self.levels[n])}")
            size = len(self.levels[m])
            if any(not 0 <= x < size for x in table):
                raise ValueError(f"Tabela de {f.key} aponta fora do nivel {m}")
        expected = expected_morphism_count(self.max_level)
        if len(self.action) != expected:
            raise ValueError(f"Tabela de acao incompleta: {len(self.action)} de {expected} morfismos")
        return self

    def __eq__(self, other):
        if not isinstance(other, TruncatedGammaSet):
            return NotImplemented
        return (
            self.max_level == other.max_level
            and self.levels == other.levels
            and self.action == other.action
        )

    def size(self, n: int) -> int:
        return len(self.levels[n])

    def act(self, f: GammaMorphism, x: int) -> int:
        return self.action[f][x]

    def table(self, f: GammaMorphism) -> np.ndarray:
        """The action of f as an integer array (cached)."""
        array = self._arrays.get(f)
        if array is None:
            array = np.asarray(self.action[f], dtype=np.int64)
            self._arrays[f] = array
        return array

    def label(self, n: int, x: int) -> str:
        return self.levels[n][x]

    def index(self, n: int, label: str) -> int:
        lookup = self._arrays.get(("index", n))
        if lookup is None:
            lookup = {lab: i for i, lab in enumerate(self.levels[n])}
            self._arrays[("index", n)] = lookup
        return lookup[label]


class GammaMap(BaseModel):
    """A level-wise map source -> target; components[n] sends source.levels[n] to target.levels[n]."""

    model_config = ConfigDict(frozen=True)

    source: TruncatedGammaSet
    target: TruncatedGammaSet
    components: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_shape(self):
        if self.source.max_level != self.target.max_level:
            raise ValueError("Origem e destino com niveis maximos diferentes")
        if len(self.components) != self.source.max_level + 1:
            raise ValueError("Numero de componentes diferente do numero de niveis")
        for n, component in enumerate(self.components):
            if len(component) != self.source.size(n):
                raise ValueError(f"Componente {n} com tamanho errado")
            if any(not 0 <= y < self.target.size(n) for y in component):
                raise ValueError(f"Componente {n} aponta fora do nivel {n} do destino")
        return self

    @property
    def max_level(self) -> int:
        return self.source.max_level

    def at(self, n: int, x: int) -> int:
        return self.components[n][x]

    def level1(self) -> tuple[int, ...]:
        return self.components[1]

    def same_components(self, other: "GammaMap") -> bool:
        return self.components == other.components


class PointedMonoid(BaseModel):
    """A finite commutative monoid on labelled elements.

    The element at index 0 is the basepoint: the absorbing zero when one is
    given, otherwise the unit. Additive monoids (the M of HM) have unit 0 and
    no zero; pointed multiplicative monoids have zero 0 and a separate unit.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    unit: int
    zero: int | None = None

    _inverses: dict = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_table(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("Elementos repetidos no monoide")
        result = validate_operation_table(self.elements, self.table, self.unit, self.zero)
        if not result.is_valid:
            raise ValueError("; ".join(result.errors[:5]))
        basepoint = self.zero if self.zero is not None else self.unit
        if basepoint != 0:
            raise ValueError("O ponto base (zero, ou a unidade na ausencia de zero) deve ser o indice 0")
        for a in range(self.size):
            for b in range(self.size):
                if self.table[a][b] == self.unit:
                    self._inverses[a] = b
                    break
        return self

    @property
    def size(self) -> int:
        return len(self.elements)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def is_group(self) -> bool:
        return self.zero is None and len(self._inverses) == self.size

    def inverse(self, a: int) -> int:
        return self._inverses[a]

    def multiple(self, k: int, a: int) -> int:
        """k·a for an integer k; negative k requires an inverse of a."""
        if k < 0:
            a = self.inverse(a)
            k = -k
        result = self.unit
        for _ in range(k % self.size if self.is_group() else k):
            result = self.table[result][a]
        return result

    def total(self, items) -> int:
        result = self.unit
        for x in items:
            result = self.table[result][x]
        return result


class FiniteSemiring(BaseModel):
    """A finite commutative semiring with additive zero at index 0."""

    model_config = ConfigDict(frozen=True)

    name: str = ""
    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    one: int

    @model_validator(mode="after")
    def _check_tables(self):
        for label, table, unit in (("adicao", self.add, 0), ("multiplicacao", self.mul, self.one)):
            result = validate_operation_table(self.elements, table, unit)
            if not result.is_valid:
                raise ValueError(f"Tabela de {label}: " + "; ".join(result.errors[:5]))
        result = validate_distributivity(self.add, self.mul, 0)
        if not result.is_valid:
            raise ValueError("; ".join(result.errors))
        return self

    @property
    def size(self) -> int:
        return len(self.elements)

    def additive_monoid(self) -> PointedMonoid:
        return PointedMonoid(name=self.name, elements=self.elements, table=self.add, unit=0)

    def multiplicative_monoid(self) -> PointedMonoid:
        return PointedMonoid(
            name=self.name, elements=self.elements, table=self.mul, unit=self.one, zero=0
        )

    def is_ring(self) -> bool:
        return self.additive_monoid().is_group()
