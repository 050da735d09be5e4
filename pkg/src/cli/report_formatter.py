"""Render reports as deterministic JSON or as plain-text tables."""

import json

import pandas as pd

from src.models.report import Report


def _json_default(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Valor nao serializavel: {type(value).__name__}")


def to_json(report: Report) -> str:
    payload = report.model_dump(by_alias=True, exclude_none=True)
    return json.dumps(payload, indent=2, ensure_ascii=False, default=_json_default) + "\n"


def _is_flat(value) -> bool:
    return not any(isinstance(v, (list, tuple, dict)) for v in value)


def _cell(value) -> str:
    """Flat lists print as {a, b}; nested values fall back to compact JSON."""
    if isinstance(value, (list, tuple)) and _is_flat(value):
        return "{" + ", ".join(str(v) for v in value) + "}"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, ensure_ascii=False, default=_json_default)
    return str(value)


def _table(rows: list[dict]) -> str:
    frame = pd.DataFrame([{key: _cell(value) for key, value in row.items()} for row in rows])
    return frame.to_string(index=False)


def _section(title: str, value) -> list[str]:
    if isinstance(value, list) and value and all(isinstance(row, dict) for row in value):
        return [f"{title}:", _table(value)]
    if isinstance(value, dict):
        lines = [f"{title}:"]
        for key, item in value.items():
            lines.extend("  " + line for line in _section(key, item))
        return lines
    return [f"{title}: {_cell(value)}"]


def to_text(report: Report) -> str:
    lines = [f"{report.schema_version} {report.command}"]
    for key, value in report.configuration.items():
        lines.append(f"  {key} = {_cell(value)}")
    lines.append("")
    for key, value in report.results.items():
        lines.extend(_section(key, value))
    if report.checks:
        lines.append("")
        lines.append(_table([check.model_dump() for check in report.checks]))
    if report.duration_seconds is not None:
        lines.append(f"duracao: {report.duration_seconds:.3f} s")
    lines.append("RESULTADO: " + ("OK" if report.passed else "FALHOU"))
    return "\n".join(lines) + "\n"


def format_report(report: Report, fmt: str = "text") -> str:
    return to_json(report) if fmt == "json" else to_text(report)
