from pydantic import BaseModel, ConfigDict, model_validator

from src.utils.validators import validate_hyperop_table


class HyperOpTable(BaseModel):
    """A commutative binary hyper-operation; entries are sorted index tuples.

    Weak unitality (0⊕x = {x}) is enforced unless `unital` is False, which is
    only used for tables read off level 2 of an arbitrary Γ-set.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    elements: tuple[str, ...]
    table: tuple[tuple[tuple[int, ...], ...], ...]
    unital: bool = True

    @model_validator(mode="after")
    def _check_table(self):
        result = validate_hyperop_table(self.elements, self.table, check_unit=self.unital)
        if not result.is_valid:
            raise ValueError("; ".join(result.errors[:5]))
        return self

    @property
    def size(self) -> int:
        return len(self.elements)

    def hsum(self, a: int, b: int) -> frozenset[int]:
        return frozenset(self.table[a][b])

    def cell_labels(self, a: int, b: int) -> list[str]:
        return [self.elements[c] for c in self.table[a][b]]


class SumQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma_set: str
    arity: int
    arguments: tuple[str, ...]


class SumResult(BaseModel):
    """Values of an n-ary sum together with the level-n elements exhibiting them."""

    model_config = ConfigDict(frozen=True)

    query: SumQuery
    values: tuple[int, ...]
    labels: tuple[str, ...]
    exhibits: tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return not self.values


class AssociativityCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    arguments: tuple[str, ...]
    partition: tuple[tuple[int, ...], ...]
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    inclusion: bool
    equality: bool
