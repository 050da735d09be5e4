"""Text normalization and parsing utilities for CLI arguments and labels."""

import ast
import re
import unicodedata

from src.utils.errors import CodecError, PartitionError

_MORPHISM_PATTERN = re.compile(r"^\s*(\d+)\s*>\s*(\d+)\s*:\s*\[([\d,\s]*)\]\s*$")


def normalize_text(text: str) -> str:
    """Lowercase, strip accents, remove extra spaces."""
    if not text:
        return ""
    text = text.strip().lower()
    text = unicodedata.normalize("NFKD", text)
    text = "".join(c for c in text if not unicodedata.combining(c))
    text = re.sub(r"\s+", " ", text)
    return text


def normalize_name(name: str) -> str:
    """Normalize a catalog name: 'Z/6', 'z6' and 'Z 6' all become 'z6'."""
    name = normalize_text(name)
    return re.sub(r"[^a-z0-9x+]", "", name)


def format_tuple(labels) -> str:
    return "(" + ",".join(str(label) for label in labels) + ")"


def encode_morphism(source: int, target: int, images) -> str:
    """Text form "n>m:[i1,...,in]" of a pointed map n+ -> m+."""
    return f"{source}>{target}:[{','.join(str(i) for i in images)}]"


def decode_morphism(text: str) -> tuple[int, int, tuple[int, ...]]:
    match = _MORPHISM_PATTERN.match(text)
    if not match:
        raise CodecError(f"Codificacao de morfismo invalida: '{text}'")
    source, target = int(match.group(1)), int(match.group(2))
    body = match.group(3).strip()
    images = tuple(int(tok) for tok in body.split(",") if tok.strip()) if body else ()
    return source, target, images


def split_list(text: str) -> list[str]:
    """Split a comma separated CLI value, keeping bracketed labels like '[1]' intact."""
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def parse_partition(text: str) -> list[list[int]]:
    """Parse '1,2|3' into [[1, 2], [3]]."""
    blocks = []
    for chunk in text.split("|"):
        try:
            block = [int(tok) for tok in split_list(chunk)]
        except ValueError as exc:
            raise PartitionError(f"Particao invalida: '{text}'") from exc
        blocks.append(block)
    return blocks


def parse_shape(text: str):
    """Parse a parenthesization like '((1,2),3)' into nested tuples of leaf positions."""
    try:
        shape = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise CodecError(f"Forma de parentizacao invalida: '{text}'") from exc
    return shape


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in split_list(text)]
    except ValueError as exc:
        raise CodecError(f"Lista de inteiros invalida: '{text}'") from exc
