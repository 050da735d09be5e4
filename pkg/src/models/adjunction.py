from pydantic import BaseModel, ConfigDict


class PointedAdditiveMap(BaseModel):
    """g: X(1+) -> M with g(*) = 0 and g(c) = g(a) + g(b) whenever c ∈ a⊕b."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    assignment: tuple[int, ...]


class AlgebraMapWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    assignment: tuple[int, ...]
    pointed: bool = True
    additive: bool = True
    unital: bool = True
    multiplicative: bool = True


class AdjunctionReport(BaseModel):
    """Outcome of comparing the two hom-sets of an adjunction on one finite instance."""

    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    kind: str
    left_count: int
    right_count: int
    cardinality_match: bool
    bijection: bool
    phi_psi_roundtrip: bool
    psi_phi_roundtrip: bool
    extensions_natural: bool
    characterization_match: bool = True

    @property
    def passed(self) -> bool:
        return (
            self.cardinality_match
            and self.bijection
            and self.phi_psi_roundtrip
            and self.psi_phi_roundtrip
            and self.extensions_natural
            and self.characterization_match
        )
