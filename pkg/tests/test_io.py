from __future__ import annotations

import json

import pytest

from hcpair.corpus import ENTRIES, admissible_fields, corpus_dir, regenerate
from hcpair.io import SchemaError, dump_document, dumps, load, load_json, parse_document
from hcpair.superlin import UnsupportedCharacteristic


def _cases():
    for e in ENTRIES:
        for F in admissible_fields(e):
            yield pytest.param(e.filename, F, id=f"{e.filename}-{F.name()}")


@pytest.mark.parametrize("name,F", list(_cases()))
def test_documents_round_trip(name, F):
    once = dump_document(load(corpus_dir() / name, F))
    twice = dump_document(parse_document(json.loads(dumps(once))))
    assert dumps(once) == dumps(twice)


def test_shipped_files_match_their_builders(tmp_path):
    for path in regenerate(tmp_path):
        assert path.read_text() == (corpus_dir() / path.name).read_text(), path.name


def _minimal():
    return {
        "kind": "dhcp",
        "body": {
            "J": {"hopf": {
                "basis": [["1", 0]],
                "unit": {"1": "1"},
                "mult": [["1", "1", {"1": "1"}]],
                "comult": {"1": [["1", "1", "1"]]},
                "counit": {"1": "1"},
            }},
            "X": ["x"],
            "action": [],
            "bracket": [],
        },
    }


def test_minimal_document_parses():
    doc = parse_document(_minimal())
    assert doc.kind == "dhcp" and doc.field.name() == "Q"
    assert doc.obj.dim_V == 1


@pytest.mark.parametrize(
    "edit,path",
    [
        (lambda d: d.update(colour="red"), "$"),
        (lambda d: d["body"].update(extra=[]), "$.body"),
        (lambda d: d["body"]["J"]["hopf"]["counit"].update({"1": 1}), "$.body.J.hopf.counit.1"),
        (lambda d: d["body"]["J"]["hopf"]["counit"].update({"1": "1/0"}), "$.body.J.hopf.counit.1"),
        (lambda d: d["body"]["J"]["hopf"]["unit"].update({"g": "1"}), "$.body.J.hopf.unit.g"),
        (lambda d: d.update(kind="group"), "$.kind"),
        (lambda d: d.update(field="R"), "$.field"),
    ],
    ids=["unknown-top", "unknown-body", "int-scalar", "div-zero", "unknown-name", "kind", "field"],
)
def test_schema_errors_carry_paths(edit, path):
    raw = _minimal()
    edit(raw)
    with pytest.raises(SchemaError) as info:
        parse_document(raw)
    assert info.value.path == path


def test_duplicate_keys_and_bad_json(tmp_path):
    p = tmp_path / "dup.json"
    p.write_text('{"kind": "hcp", "kind": "hcp", "body": {}}')
    with pytest.raises(SchemaError, match="duplicate key"):
        load_json(p)
    p.write_text('{\n  "kind": "hcp",\n  "body": {,}\n}')
    with pytest.raises(SchemaError, match="line 3"):
        load_json(p)


def test_characteristic_two_is_refused():
    raw = _minimal()
    raw["field"] = "Fp:2"
    with pytest.raises(UnsupportedCharacteristic):
        parse_document(raw)
    with pytest.raises(UnsupportedCharacteristic):
        parse_document(_minimal(), "GF(2)")
