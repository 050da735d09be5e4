"""JSON input files: Γ-sets, monoids, semirings, matrices and hyper-operation tables.

Every document may carry "schema": "gammaforge/1"; labels are strings and
operation tables are given by label.
"""

import json
import logging
from pathlib import Path

from pydantic import ValidationError

from config.constants import SCHEMA_VERSION
from src.models.abelian import IntMatrix
from src.models.gamma import GammaMorphism
from src.models.gamma_set import FiniteSemiring, PointedMonoid, TruncatedGammaSet
from src.models.hyper import HyperOpTable
from src.utils.errors import CodecError
from src.utils.text_processing import decode_morphism

logger = logging.getLogger(__name__)


def load_json(text: str) -> dict | list:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodecError(f"JSON invalido: {exc.msg}", line=exc.lineno, column=exc.colno) from exc


def read_file(path) -> dict | list:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CodecError(f"Nao foi possivel ler '{path}': {exc.strerror}") from exc
    logger.debug("Reading %s", path)
    return load_json(text)


def _check_schema(data, kind: str) -> dict:
    if not isinstance(data, dict):
        raise CodecError(f"Esperado um objeto JSON para {kind}")
    schema = data.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise CodecError(f"Versao de esquema nao suportada: '{schema}' (esperado '{SCHEMA_VERSION}')")
    declared = data.get("kind", kind)
    if declared != kind:
        raise CodecError(f"Documento do tipo '{declared}', esperado '{kind}'")
    return data


def _require(data: dict, *keys: str):
    missing = [key for key in keys if key not in data]
    if missing:
        raise CodecError(f"Campos obrigatorios ausentes: {', '.join(missing)}")


def _validated(factory, **fields):
    try:
        return factory(**fields)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise CodecError(f"Documento invalido: {first['msg']}") from exc


def _labels(values) -> tuple[str, ...]:
    return tuple(str(v) for v in values)


def _index_table(elements: tuple[str, ...], table) -> tuple[tuple[int, ...], ...]:
    position = {label: i for i, label in enumerate(elements)}
    try:
        return tuple(tuple(position[str(cell)] for cell in row) for row in table)
    except KeyError as exc:
        raise CodecError(f"Rotulo desconhecido na tabela: {exc.args[0]}") from exc
    except TypeError as exc:
        raise CodecError("Tabela deve ser uma lista de listas") from exc


def _basepoint_first(elements: tuple[str, ...], basepoint: str) -> tuple[str, ...]:
    if basepoint not in elements:
        raise CodecError(f"Elemento '{basepoint}' nao pertence a {list(elements)}")
    return (basepoint,) + tuple(e for e in elements if e != basepoint)


def _reorder(elements: tuple[str, ...], order: tuple[str, ...], table) -> list[list[str]]:
    """Rewrite a label table so rows and columns follow `order`."""
    lookup = {(a, b): str(table[i][j]) for i, a in enumerate(elements) for j, b in enumerate(elements)}
    return [[lookup[(a, b)] for b in order] for a in order]


# ---------------------------------------------------------------------------
# Monoids and semirings
# ---------------------------------------------------------------------------

def monoid_from_dict(data) -> PointedMonoid:
    """{elements, op, unit, zero?}; elements are reordered so the basepoint comes first."""
    data = _check_schema(data, "monoid")
    _require(data, "elements", "op", "unit")
    elements = _labels(data["elements"])
    unit = str(data["unit"])
    zero = str(data["zero"]) if data.get("zero") is not None else None
    order = _basepoint_first(elements, zero if zero is not None else unit)
    if unit not in order:
        raise CodecError(f"Elemento '{unit}' nao pertence a {list(elements)}")
    if len(data["op"]) != len(elements):
        raise CodecError("Tabela 'op' com numero de linhas errado")
    table = _index_table(order, _reorder(elements, order, data["op"]))
    return _validated(
        PointedMonoid,
        name=str(data.get("name", "")),
        elements=order,
        table=table,
        unit=order.index(unit),
        zero=0 if zero is not None else None,
    )


def semiring_from_dict(data) -> FiniteSemiring:
    """{elements, add, mul, one, zero?}; zero defaults to the first element."""
    data = _check_schema(data, "semiring")
    _require(data, "elements", "add", "mul", "one")
    elements = _labels(data["elements"])
    zero = str(data.get("zero", elements[0] if elements else ""))
    order = _basepoint_first(elements, zero)
    for key in ("add", "mul"):
        if len(data[key]) != len(elements):
            raise CodecError(f"Tabela '{key}' com numero de linhas errado")
    one = str(data["one"])
    if one not in order:
        raise CodecError(f"Elemento '{one}' nao pertence a {list(elements)}")
    return _validated(
        FiniteSemiring,
        name=str(data.get("name", "")),
        elements=order,
        add=_index_table(order, _reorder(elements, order, data["add"])),
        mul=_index_table(order, _reorder(elements, order, data["mul"])),
        one=order.index(one),
    )


def matrix_from_dict(data) -> IntMatrix:
    """A bare list of rows, or {"rows": [...], "cols": n}."""
    if isinstance(data, list):
        data = {"rows": data}
    data = _check_schema(data, "matrix")
    _require(data, "rows")
    try:
        return IntMatrix.from_rows(data["rows"], cols=data.get("cols"))
    except (TypeError, ValueError) as exc:
        raise CodecError(f"Matriz invalida: {exc}") from exc


def hyperop_from_dict(data) -> HyperOpTable:
    """{elements, table} with table[a][b] the list of labels in a⊕b; elements[0] is the zero."""
    data = _check_schema(data, "hyperop")
    _require(data, "elements", "table")
    elements = _labels(data["elements"])
    position = {label: i for i, label in enumerate(elements)}
    try:
        table = tuple(
            tuple(tuple(sorted(position[str(c)] for c in cell)) for cell in row)
            for row in data["table"]
        )
    except KeyError as exc:
        raise CodecError(f"Rotulo desconhecido na tabela: {exc.args[0]}") from exc
    except TypeError as exc:
        raise CodecError("Cada celula da tabela deve ser uma lista de rotulos") from exc
    return _validated(HyperOpTable, name=str(data.get("name", "")), elements=elements, table=table)


def hyperop_to_dict(T: HyperOpTable) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "hyperop",
        "name": T.name,
        "elements": list(T.elements),
        "table": [[[T.elements[c] for c in cell] for cell in row] for row in T.table],
    }


# ---------------------------------------------------------------------------
# Γ-sets
# ---------------------------------------------------------------------------

def gamma_set_from_dict(data) -> TruncatedGammaSet:
    """{max_level, levels, action: {"n>m:[...]": [target indices]}}."""
    data = _check_schema(data, "gamma_set")
    _require(data, "max_level", "levels", "action")
    if not isinstance(data["action"], dict):
        raise CodecError("'action' deve mapear morfismos a tabelas")
    action = {}
    for key, table in data["action"].items():
        source, target, images = decode_morphism(key)
        try:
            f = GammaMorphism.of(source, target, images)
        except ValueError as exc:
            raise CodecError(f"Morfismo invalido '{key}'") from exc
        action[f] = tuple(int(x) for x in table)
    return _validated(
        TruncatedGammaSet,
        name=str(data.get("name", "")),
        max_level=data["max_level"],
        levels=tuple(_labels(level) for level in data["levels"]),
        action=action,
    )


def gamma_set_to_dict(X: TruncatedGammaSet) -> dict:
    """Deterministic form: morphisms sorted by (source, target, images)."""
    ordered = sorted(X.action, key=lambda f: (f.source.n, f.target.n, f.images))
    return {
        "schema": SCHEMA_VERSION,
        "kind": "gamma_set",
        "name": X.name,
        "max_level": X.max_level,
        "levels": [list(level) for level in X.levels],
        "action": {f.key: list(X.action[f]) for f in ordered},
    }


_READERS = {
    "gamma_set": gamma_set_from_dict,
    "monoid": monoid_from_dict,
    "semiring": semiring_from_dict,
    "matrix": matrix_from_dict,
    "hyperop": hyperop_from_dict,
}


def read_document(path, kind: str | None = None):
    """Read a file and decode it by its declared (or the requested) kind."""
    data = read_file(path)
    if kind is None:
        if isinstance(data, list):
            kind = "matrix"
        elif isinstance(data, dict) and "kind" in data:
            kind = data["kind"]
        else:
            raise CodecError(f"'{path}' nao declara 'kind'")
    reader = _READERS.get(kind)
    if reader is None:
        raise CodecError(f"Tipo de documento desconhecido: '{kind}'")
    return reader(data)
