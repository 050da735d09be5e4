from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.constants import CONSTRUCTION_KINDS, SCHEMA_VERSION


class ConstructionDescriptor(BaseModel):
    """How to build a Γ-set (or 𝔽₁-algebra) from the command line."""

    model_config = ConfigDict(frozen=True)

    kind: str
    max_level: int = Field(default=3, ge=2)
    monoid: str | None = None
    pointed_set: tuple[str, ...] | None = None
    subobject: tuple[str, ...] | None = None
    table: str | None = None
    file: str | None = None
    algebra: bool = False
    guard: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_parameters(self):
        if self.kind not in CONSTRUCTION_KINDS:
            raise ValueError(f"Construcao desconhecida: {self.kind}")
        needs = {
            "em": ("monoid",),
            "collapse": ("monoid", "subobject"),
            "plasma": ("table",),
            "file": ("file",),
        }
        for field in needs.get(self.kind, ()):
            if getattr(self, field) is None:
                raise ValueError(f"Construcao '{self.kind}' exige --{field.replace('_', '-')}")
        if self.kind == "spherical" and self.pointed_set is None and self.monoid is None:
            raise ValueError("Construcao 'spherical' exige --pointed-set ou --monoid")
        if self.algebra and self.kind in ("plasma", "file"):
            raise ValueError(f"Construcao '{self.kind}' nao tem estrutura de algebra")
        return self

    def summary(self) -> dict:
        return self.model_dump(exclude_none=True)


class CheckOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    checked: int = 0
    violations: int = 0
    detail: str = ""


class Report(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    command: str
    configuration: dict[str, Any] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckOutcome] = Field(default_factory=list)
    duration_seconds: float | None = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
