from pydantic import BaseModel, ConfigDict, model_validator

from src.models.abelian import FpAbelianGroup
from src.models.gamma_set import PointedMonoid, TruncatedGammaSet


class F1Algebra(BaseModel):
    """A Γ-set carrier plus the pointed commutative monoid structure on its level 1."""

    model_config = ConfigDict(frozen=True)

    name: str = ""
    carrier: TruncatedGammaSet
    monoid: PointedMonoid

    @model_validator(mode="after")
    def _check_level1(self):
        if self.monoid.elements != self.carrier.levels[1]:
            raise ValueError("O monoide deve estar definido sobre o nivel 1 do suporte")
        if self.monoid.zero != 0:
            raise ValueError("O zero do monoide deve ser o ponto base do nivel 1")
        return self

    @property
    def unit(self) -> int:
        return self.monoid.unit


class FpRing(BaseModel):
    """A commutative ring presented additively by `additive`.

    products[a][b] is the product of generators a and b as an integer vector
    over the generators; unit is the vector of 1.
    """

    model_config = ConfigDict(frozen=True)

    name: str = ""
    additive: FpAbelianGroup
    products: tuple[tuple[tuple[int, ...], ...], ...]
    unit: tuple[int, ...]

    @model_validator(mode="after")
    def _check_shapes(self):
        k = len(self.additive.generators)
        if len(self.products) != k or any(len(row) != k for row in self.products):
            raise ValueError(f"Tabela de produtos deve ser {k}x{k}")
        if any(len(v) != k for row in self.products for v in row) or len(self.unit) != k:
            raise ValueError("Vetores de produto com dimensao errada")
        return self

    @property
    def generators(self) -> tuple[str, ...]:
        return self.additive.generators

    def multiply(self, u, v) -> tuple[int, ...]:
        """Bilinear extension of the generator products."""
        k = len(self.generators)
        out = [0] * k
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if not vb:
                    continue
                coeff = ua * vb
                for c, x in enumerate(self.products[a][b]):
                    if x:
                        out[c] += coeff * x
        return tuple(out)


class RelationRecord(BaseModel):
    """One relation row and where it came from.

    kind is "basepoint", "additivity" (sources lists the (a, b, c) with
    c ∈ a⊕b producing the row) or "ideal" (added by saturation).
    """

    model_config = ConfigDict(frozen=True)

    row: tuple[int, ...]
    kind: str = "additivity"
    sources: tuple[tuple[str, str, str], ...] = ()


class TensorResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str = ""
    group: FpAbelianGroup
    iota: tuple[tuple[int, ...], ...]
    relations: tuple[RelationRecord, ...]
    ring: FpRing | None = None
    saturation_added: bool = False
