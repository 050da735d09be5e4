"""Build Γ-sets and 𝔽₁-algebras from construction descriptors."""

import logging
from pathlib import Path

from config.constants import NAMED_TABLES
from config.settings import ENUMERATION_GUARD
from src.codec import json_codec
from src.models.gamma_set import (
    FiniteSemiring,
    PointedMonoid,
    TruncatedGammaSet,
    expected_morphism_count,
)
from src.models.hyper import HyperOpTable
from src.models.report import ConstructionDescriptor
from src.models.ring import F1Algebra
from src.services import catalog_service as catalog
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.services import scalars_service as scalars
from src.utils.errors import GammaSetValidationError, GuardExceededError, UnknownNameError
from src.utils.text_processing import normalize_name

logger = logging.getLogger(__name__)


def _is_file(value: str) -> bool:
    return value.endswith(".json") or Path(value).is_file()


def resolve_monoid(value: str) -> PointedMonoid:
    """Additive monoid from a catalog name or a monoid JSON file."""
    if _is_file(value):
        return json_codec.read_document(value, "monoid")
    return catalog.get_monoid(value)


def resolve_pointed_monoid(value: str) -> PointedMonoid:
    if _is_file(value):
        return json_codec.read_document(value, "monoid")
    return catalog.get_pointed_monoid(value)


def resolve_semiring(value: str) -> FiniteSemiring:
    if _is_file(value):
        return json_codec.read_document(value, "semiring")
    return catalog.get_semiring(value)


def resolve_table(value: str) -> HyperOpTable:
    if _is_file(value):
        return json_codec.read_document(value, "hyperop")
    factory = NAMED_TABLES.get(normalize_name(value))
    if factory is None:
        raise UnknownNameError(
            f"Tabela desconhecida: '{value}' (disponiveis: {', '.join(NAMED_TABLES)})"
        )
    return getattr(hyper, factory)()


def _guard(descriptor: ConstructionDescriptor) -> int:
    return descriptor.guard or ENUMERATION_GUARD


def read_gamma_set_file(path: str, guard: int = ENUMERATION_GUARD, check: bool = True) -> TruncatedGammaSet:
    """Γ-set from JSON; with check, a non-functorial action is rejected."""
    X = json_codec.read_document(path, "gamma_set")
    count = expected_morphism_count(X.max_level)
    if count > guard:
        raise GuardExceededError(f"{path} no nivel {X.max_level}", count, guard)
    if check:
        report = gamma_sets.validate_functoriality(X)
        if not report.is_valid:
            logger.warning("%s: %d falhas de funtorialidade", path, len(report.errors))
            raise GammaSetValidationError(f"{path} nao e funtorial: {report.errors[0]}")
    return X


def build_gamma_set(descriptor: ConstructionDescriptor, check: bool = True) -> TruncatedGammaSet:
    """Build the described Γ-set; check=False skips validation of file input."""
    N = descriptor.max_level
    kind = descriptor.kind
    guard = _guard(descriptor)
    if descriptor.algebra:
        return build_algebra(descriptor).carrier
    if kind == "f1":
        return gamma_sets.f1(N, guard)
    if kind == "em":
        return gamma_sets.eilenberg_maclane(resolve_monoid(descriptor.monoid), N, guard)
    if kind == "spherical":
        labels = descriptor.pointed_set
        if labels is None:
            labels = resolve_pointed_monoid(descriptor.monoid).elements
        return gamma_sets.spherical(labels, N, guard)
    if kind == "collapse":
        M = resolve_monoid(descriptor.monoid)
        H = gamma_sets.eilenberg_maclane(M, N, guard)
        name = f"H({M.name})/H({{{','.join(descriptor.subobject)}}})"
        return gamma_sets.collapse_quotient(
            H, gamma_sets.em_subobject(M, descriptor.subobject, N), name, guard
        )
    if kind == "plasma":
        return hyper.plasma_embedding(resolve_table(descriptor.table), N, guard)
    return read_gamma_set_file(descriptor.file, guard, check)


def build_algebra(descriptor: ConstructionDescriptor) -> F1Algebra:
    """em: H(R) for a semiring; spherical: 𝕊M for a pointed monoid; collapse: H(R)/H(I)."""
    N = descriptor.max_level
    kind = descriptor.kind
    guard = _guard(descriptor)
    if kind == "f1":
        return scalars.spherical_algebra(catalog.pointed_f1(), N, guard)
    if kind == "em":
        return scalars.em_algebra(resolve_semiring(descriptor.monoid), N, guard)
    if kind == "spherical":
        if descriptor.monoid is None:
            raise UnknownNameError("A algebra esferica exige --monoid com um monoide pontuado")
        return scalars.spherical_algebra(resolve_pointed_monoid(descriptor.monoid), N, guard)
    if kind == "collapse":
        return scalars.quotient_algebra(
            resolve_semiring(descriptor.monoid), descriptor.subobject, N, guard
        )
    raise UnknownNameError(f"Construcao '{kind}' nao tem estrutura de algebra")
