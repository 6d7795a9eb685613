import json

import pytest

from holodiff.documents import (
    DECOMP_REPORT_SCHEMA,
    RAM_INPUT_SCHEMA,
    dumps,
    load_schema,
    ram_input_from_document,
    ram_input_to_document,
    validate_document,
)
from holodiff.errors import DocumentError, ValidationError
from holodiff.psl2mod3.counts import ram_input


def z3_document() -> dict:
    return {"p": 3, "n": 1, "c": 1, "n_I": 1, "genus_Z": 1, "points": [{"wild_exp": 1, "jumps": [1]}]}


def test_parse_minimal_document() -> None:
    ram = ram_input_from_document(z3_document())
    assert ram.group.order == 3
    assert ram.points[0].jumps == (1,)
    assert ram.points[0].count == 1


def test_document_of_built_input_parses_back() -> None:
    ram = ram_input(11, "Delta1")
    assert ram_input_from_document(ram_input_to_document(ram)) == ram


def test_missing_field() -> None:
    document = z3_document()
    del document["p"]
    with pytest.raises(DocumentError) as info:
        ram_input_from_document(document)
    assert info.value.field == "$"
    assert "'p'" in info.value.message


def test_schema_type_error_names_field() -> None:
    document = z3_document()
    document["n_I"] = -1
    with pytest.raises(DocumentError) as info:
        ram_input_from_document(document)
    assert info.value.field == "n_I"


def test_jump_divisible_by_p() -> None:
    document = z3_document()
    document["points"][0]["jumps"] = [3]
    with pytest.raises(DocumentError) as info:
        ram_input_from_document(document)
    assert info.value.field == "points[0]"
    assert "jump not coprime to p" in info.value.message
    assert isinstance(info.value, ValidationError)


def test_bad_group() -> None:
    document = z3_document()
    document["p"] = 4
    with pytest.raises(DocumentError) as info:
        ram_input_from_document(document)
    assert info.value.field == "group"


def test_report_schema_rejects_unknown_kind() -> None:
    with pytest.raises(DocumentError):
        validate_document({"kind": "other"}, DECOMP_REPORT_SCHEMA)


def test_schemas_load() -> None:
    assert load_schema(RAM_INPUT_SCHEMA)["title"] == "RamInputDocument"
    assert load_schema(DECOMP_REPORT_SCHEMA)["title"] == "DecompReport"


def test_dumps_is_canonical() -> None:
    text = dumps({"b": 1, "a": [1, 2]})
    assert text == dumps(json.loads(text))
    assert text.index('"a"') < text.index('"b"')
