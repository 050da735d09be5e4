import json
from pathlib import Path

import pytest

from src.codec import json_codec as codec
from src.services import abgrp_service as abgrp
from src.services import catalog_service as catalog
from src.services import gamma_set_service as gamma_sets
from src.services import hyper_service as hyper
from src.utils.errors import CodecError

EXAMPLES = Path(__file__).resolve().parent.parent / "data" / "examples"


def _write(tmp_path, payload, name="doc.json") -> Path:
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
    return path


def test_malformed_json_reports_position(tmp_path):
    path = _write(tmp_path, '{\n  "kind": "matrix",\n  "rows": [[1, 2]\n}')
    with pytest.raises(CodecError) as info:
        codec.read_document(path)
    assert info.value.line == 4


def test_missing_file(tmp_path):
    with pytest.raises(CodecError):
        codec.read_file(tmp_path / "missing.json")


def test_f1_file_matches_construction():
    assert codec.read_document(EXAMPLES / "f1_level2.json") == gamma_sets.f1(2)


def test_pointed_monoid_is_reordered_basepoint_first():
    assert codec.read_document(EXAMPLES / "mu2_pointed.json") == catalog.pointed_mu2()


def test_additive_monoid_file():
    assert codec.read_document(EXAMPLES / "z6_monoid.json") == catalog.cyclic_group(6)


def test_semiring_file():
    assert codec.read_document(EXAMPLES / "z4_semiring.json") == catalog.zn_ring(4)


def test_matrix_file():
    matrix = codec.read_document(EXAMPLES / "matrix_4_6.json")
    assert abgrp.smith_normal_form(matrix).d.to_lists() == [[2, 0]]


def test_bare_list_is_a_matrix(tmp_path):
    matrix = codec.read_document(_write(tmp_path, [[1, 2], [3, 4]]))
    assert matrix.rows == 2 and matrix.cols == 2


def test_hyperop_file():
    assert codec.read_document(EXAMPLES / "sign_hyperop.json") == hyper.sign_hyperfield()


def test_gamma_set_dict_round_trip(sphere_ab):
    data = json.loads(json.dumps(codec.gamma_set_to_dict(sphere_ab)))
    assert codec.gamma_set_from_dict(data) == sphere_ab


def test_hyperop_dict_round_trip():
    T = hyper.krasner()
    assert codec.hyperop_from_dict(codec.hyperop_to_dict(T)) == T


def test_unsupported_schema():
    with pytest.raises(CodecError):
        codec.matrix_from_dict({"schema": "gammaforge/9", "rows": [[1]]})


def test_kind_mismatch(tmp_path):
    path = _write(tmp_path, {"kind": "matrix", "rows": [[1]]})
    with pytest.raises(CodecError):
        codec.read_document(path, kind="monoid")


def test_document_without_kind(tmp_path):
    with pytest.raises(CodecError):
        codec.read_document(_write(tmp_path, {"rows": [[1]]}))


def test_unknown_label_in_table():
    with pytest.raises(CodecError):
        codec.monoid_from_dict(
            {"elements": ["0", "1"], "op": [["0", "1"], ["1", "2"]], "unit": "0"}
        )


def test_missing_fields():
    with pytest.raises(CodecError):
        codec.semiring_from_dict({"elements": ["0", "1"], "add": [["0", "1"], ["1", "0"]]})


def test_invalid_monoid_table_becomes_codec_error():
    with pytest.raises(CodecError):
        codec.monoid_from_dict({"elements": ["0", "1"], "op": [["0", "1"], ["0", "1"]], "unit": "0"})


def test_incomplete_gamma_set_becomes_codec_error(sphere_ab):
    data = codec.gamma_set_to_dict(sphere_ab)
    data["action"].popitem()
    with pytest.raises(CodecError):
        codec.gamma_set_from_dict(data)
