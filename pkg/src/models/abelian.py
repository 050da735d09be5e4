from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator


class IntMatrix(BaseModel):
    """Dense integer matrix; Python ints keep entries exact."""

    model_config = ConfigDict(frozen=True)

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_dims(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"Matriz declara {self.rows} linhas, recebeu {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"Linha {i} tem {len(row)} colunas, esperadas {self.cols}")
        return self

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(rows=len(entries), cols=cols, entries=entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


class SmithForm(BaseModel):
    """U·A·V = D; v_inv is V⁻¹, kept to lift canonical basis vectors back to generators."""

    model_config = ConfigDict(frozen=True)

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    v_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d.entries[i][i] for i in range(min(self.d.rows, self.d.cols)))


class FpAbelianGroup(BaseModel):
    """Z^generators modulo the row space of `relations`."""

    model_config = ConfigDict(frozen=True)

    name: str = ""
    generators: tuple[str, ...]
    relations: IntMatrix

    _smith: SmithForm | None = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _check_columns(self):
        if self.relations.cols != len(self.generators):
            raise ValueError(
                f"Relacoes com {self.relations.cols} colunas para {len(self.generators)} geradores"
            )
        return self

    def __eq__(self, other):
        if not isinstance(other, FpAbelianGroup):
            return NotImplemented
        return self.generators == other.generators and self.relations == other.relations

    @property
    def rank(self) -> int:
        return len(self.generators)


class AbelianHom(BaseModel):
    """images[i] is the image of generator i, as an integer vector over target.generators."""

    model_config = ConfigDict(frozen=True)

    source: FpAbelianGroup
    target: FpAbelianGroup
    images: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_images(self):
        if len(self.images) != len(self.source.generators):
            raise ValueError("Numero de imagens diferente do numero de geradores")
        if any(len(img) != len(self.target.generators) for img in self.images):
            raise ValueError("Imagem com dimensao errada")
        return self
