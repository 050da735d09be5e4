from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.utils.text_processing import encode_morphism


class GammaObject(BaseModel):
    """The pointed set n+ = {0, 1, ..., n} with basepoint 0."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)

    def __str__(self) -> str:
        return f"{self.n}+"


class GammaMorphism(BaseModel):
    """A pointed map source -> target; images[i] is the image of element i+1."""

    model_config = ConfigDict(frozen=True)

    source: GammaObject
    target: GammaObject
    images: tuple[int, ...]

    @model_validator(mode="after")
    def _check_images(self):
        if len(self.images) != self.source.n:
            raise ValueError(
                f"Morfismo de {self.source} precisa de {self.source.n} imagens, recebeu {len(self.images)}"
            )
        for image in self.images:
            if not 0 <= image <= self.target.n:
                raise ValueError(f"Imagem {image} fora de {self.target}")
        return self

    @classmethod
    def of(cls, n: int, m: int, images) -> "GammaMorphism":
        return cls(source=GammaObject(n=n), target=GammaObject(n=m), images=tuple(images))

    @property
    def key(self) -> str:
        return encode_morphism(self.source.n, self.target.n, self.images)

    def __call__(self, element: int) -> int:
        return 0 if element == 0 else self.images[element - 1]

    def preimage(self, block: set[int] | frozenset[int]) -> frozenset[int]:
        """Nonzero elements of the source sent into `block`."""
        return frozenset(i + 1 for i, image in enumerate(self.images) if image in block)

    def __str__(self) -> str:
        return self.key
