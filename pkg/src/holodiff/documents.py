"""JSON documents: schema validation, parsing and canonical serialization."""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from importlib.resources import files
from typing import Any

from jsonschema import Draft202012Validator

from holodiff.errors import DocumentError, GroupError, RamInputError
from holodiff.hypogroup import HypoGroup
from holodiff.ramfilter import RamInput, RamPoint

logger = logging.getLogger(__name__)

RAM_INPUT_SCHEMA = "ram_input.schema.json"
DECOMP_REPORT_SCHEMA = "decomp_report.schema.json"


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict[str, Any]:
    """Load a schema shipped in ``holodiff/schemas``."""
    return json.loads(files("holodiff").joinpath("schemas", name).read_text(encoding="utf-8"))


def _path(error: Any) -> str:
    parts = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in error.absolute_path)
    return parts.lstrip(".") or "$"


def validate_document(document: Any, schema_name: str) -> None:
    """Raise ``DocumentError`` naming the first offending field."""
    validator = Draft202012Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(document), key=lambda err: list(map(str, err.absolute_path)))
    if errors:
        raise DocumentError(_path(errors[0]), errors[0].message)


def ram_input_from_document(document: Any) -> RamInput:
    """Validate a RamInputDocument and build the ``RamInput`` it describes."""
    validate_document(document, RAM_INPUT_SCHEMA)
    try:
        group = HypoGroup(
            p=document["p"],
            n=document["n"],
            c=document["c"],
            chi_index=document.get("chi_index", 0),
            action_unit=document.get("action_unit", 1),
        )
    except GroupError as exc:
        raise DocumentError("group", str(exc)) from exc
    points = tuple(
        RamPoint(
            wild_exp=point["wild_exp"],
            jumps=tuple(point.get("jumps", ())),
            tame_order=point.get("tame_order", 1),
            fund_char_exp=point.get("fund_char_exp", 0),
            count=point.get("count", 1),
        )
        for point in document["points"]
    )
    try:
        return RamInput(group=group, n_I=document["n_I"], genus_Z=document["genus_Z"], points=points)
    except RamInputError as exc:
        message = str(exc)
        if message.startswith("points["):
            field, _, rest = message.partition(": ")
            raise DocumentError(field, rest) from exc
        raise DocumentError("$", message) from exc


def ram_input_to_document(ram: RamInput) -> dict[str, Any]:
    """Return the RamInputDocument of ``ram``."""
    group = ram.group
    return {
        "p": group.p,
        "n": group.n,
        "c": group.c,
        "chi_index": group.chi_index,
        "action_unit": group.action_unit,
        "n_I": ram.n_I,
        "genus_Z": ram.genus_Z,
        "points": [
            {
                "wild_exp": point.wild_exp,
                "jumps": list(point.jumps),
                "tame_order": point.tame_order,
                "fund_char_exp": point.fund_char_exp,
                "count": point.count,
            }
            for point in ram.points
        ],
    }


def dumps(report: Any) -> str:
    """Serialize canonically so that parse and re-serialize is byte-identical."""
    return json.dumps(report, indent=2, sort_keys=True)
