"""JSON documents for Hopf superalgebras, Lie superalgebras, dual pairs and pairs.

Every document is an object with a ``kind`` and kind-specific fields.
Scalars are always strings (``"3/4"``, ``"-1"``); unknown or duplicate keys
are rejected, and every error carries the JSON path of the offending field.

Sparse tables use lists so that basis names never have to be split:

* ``mult``: ``[[a, b, {c: s}], ...]``
* ``comult``: ``{a: [[b, c, s], ...]}``
* ``action``: ``[[x, a, {y: s}], ...]``, ``bracket``: ``[[x, y, {a: s}], ...]``
* ``coaction``: ``{w: [[v, c, s], ...]}``
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .dhcp import DHCPData
from .hcp import HCPData
from .hopfcore.algebra import HopfSuperAlgebraData
from .lie import LieSuperalgebra, lie_from_names
from .rewrite import EnvelopingJ, FiniteJ, PresentationError, presentation_from_names
from .superlin import FieldSpec
from .superlin.field import FieldError

KINDS = ("hopf", "lie_superalgebra", "dhcp", "hcp")


class SchemaError(ValueError):
    """Malformed input; ``path`` locates the field (``$.C.mult[2]``)."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(eq=False)
class Document:
    kind: str
    name: str
    field: FieldSpec
    obj: Any
    description: str = ""


# -- low-level readers ------------------------------------------------------------

def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise SchemaError("$", f"duplicate key {k!r}")
        out[k] = v
    return out


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _obj(x, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(x, dict):
        raise SchemaError(path, "expected an object")
    unknown = sorted(set(x) - set(required) - set(optional))
    if unknown:
        raise SchemaError(path, f"unknown field(s) {unknown}")
    missing = [k for k in required if k not in x]
    if missing:
        raise SchemaError(path, f"missing field(s) {missing}")
    return x


def _list(x, path: str) -> list:
    if not isinstance(x, list):
        raise SchemaError(path, "expected a list")
    return x


def _str(x, path: str) -> str:
    if not isinstance(x, str):
        raise SchemaError(path, "expected a string")
    return x


def _scalar(F: FieldSpec, x, path: str):
    if not isinstance(x, str):
        raise SchemaError(path, f"scalar must be a string literal, got {x!r}")
    try:
        return F.parse(x)
    except FieldError as exc:
        raise SchemaError(path, str(exc)) from None


def _name(x, names: dict[str, int], path: str) -> int:
    x = _str(x, path)
    if x not in names:
        raise SchemaError(path, f"unknown basis name {x!r}")
    return names[x]


def _vector(F: FieldSpec, x, names: dict[str, int], path: str) -> dict[int, object]:
    if not isinstance(x, dict):
        raise SchemaError(path, "expected a vector {name: scalar}")
    out = {}
    for k, v in x.items():
        c = _scalar(F, v, f"{path}.{k}")
        if c != 0:
            out[_name(k, names, f"{path}.{k}")] = c
    return out


def _basis(x, path: str) -> list[tuple[str, int]]:
    out = []
    for i, item in enumerate(_list(x, path)):
        p = f"{path}[{i}]"
        if not (isinstance(item, list) and len(item) == 2):
            raise SchemaError(p, "expected [name, parity]")
        name = _str(item[0], p + "[0]")
        if item[1] not in (0, 1) or isinstance(item[1], bool):
            raise SchemaError(p + "[1]", "parity must be 0 or 1")
        out.append((name, item[1]))
    if len({n for n, _ in out}) != len(out):
        raise SchemaError(path, "duplicate basis names")
    return out


def _index(names) -> dict[str, int]:
    return {n: i for i, n in enumerate(names)}


# -- Hopf superalgebras ---------------------------------------------------------------

def parse_hopf(x, F: FieldSpec, path: str = "$") -> HopfSuperAlgebraData:
    x = _obj(x, path, ("basis", "unit", "mult", "comult", "counit"), ("antipode",))
    basis = _basis(x["basis"], path + ".basis")
    idx = _index(n for n, _ in basis)
    unit = _vector(F, x["unit"], idx, path + ".unit")
    mult: dict = {}
    for i, item in enumerate(_list(x["mult"], path + ".mult")):
        p = f"{path}.mult[{i}]"
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(p, "expected [a, b, vector]")
        key = (_name(item[0], idx, p + "[0]"), _name(item[1], idx, p + "[1]"))
        if key in mult:
            raise SchemaError(p, "duplicate product entry")
        mult[key] = _vector(F, item[2], idx, p + "[2]")
    cm = x["comult"]
    if not isinstance(cm, dict):
        raise SchemaError(path + ".comult", "expected an object keyed by basis names")
    comult: list[dict] = [{} for _ in basis]
    for k, rows in cm.items():
        a = _name(k, idx, f"{path}.comult")
        for i, item in enumerate(_list(rows, f"{path}.comult.{k}")):
            p = f"{path}.comult.{k}[{i}]"
            if not (isinstance(item, list) and len(item) == 3):
                raise SchemaError(p, "expected [b, c, scalar]")
            key = (_name(item[0], idx, p + "[0]"), _name(item[1], idx, p + "[1]"))
            c = _scalar(F, item[2], p + "[2]")
            if c != 0:
                comult[a][key] = comult[a].get(key, F.zero) + c
    counit = [F.zero] * len(basis)
    for a, c in _vector(F, x["counit"], idx, path + ".counit").items():
        counit[a] = c
    antipode = None
    if "antipode" in x:
        s = x["antipode"]
        if not isinstance(s, dict):
            raise SchemaError(path + ".antipode", "expected an object keyed by basis names")
        antipode = [{} for _ in basis]
        for k, v in s.items():
            antipode[_name(k, idx, path + ".antipode")] = _vector(F, v, idx, f"{path}.antipode.{k}")
    try:
        return HopfSuperAlgebraData.build(F, basis, mult, unit, comult, counit, antipode)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def _fmt_vec(F: FieldSpec, v, names) -> dict[str, str]:
    return {names[k]: F.format(c) for k, c in sorted(v.items())}


def dump_hopf(h: HopfSuperAlgebraData) -> dict:
    F, names = h.field, h.names
    return {
        "basis": [[n, p] for n, p in zip(names, h.parity)],
        "unit": _fmt_vec(F, h.unit, names),
        "mult": [[names[i], names[j], _fmt_vec(F, v, names)] for (i, j), v in sorted(h.mult.items()) if v],
        "comult": {
            names[a]: [[names[i], names[j], F.format(c)] for (i, j), c in sorted(h.comult[a].items())]
            for a in range(h.dim)
        },
        "counit": {names[a]: F.format(c) for a, c in enumerate(h.counit) if c != 0},
        "antipode": {names[a]: _fmt_vec(F, h.antipode[a], names) for a in range(h.dim)},
    }


# -- Lie superalgebras --------------------------------------------------------------------

def _table(F, x, left: dict, right: dict, values: dict, path: str) -> dict:
    out: dict = {}
    for i, item in enumerate(_list(x, path)):
        p = f"{path}[{i}]"
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(p, "expected [a, b, vector]")
        key = (_name(item[0], left, p + "[0]"), _name(item[1], right, p + "[1]"))
        if key in out:
            raise SchemaError(p, "duplicate entry")
        out[key] = _vector(F, item[2], values, p + "[2]")
    return out


def parse_lie(x, F: FieldSpec, path: str = "$", even_only: bool = False) -> LieSuperalgebra:
    x = _obj(x, path, ("basis", "bracket"))
    if even_only:
        names = [_str(n, f"{path}.basis[{i}]") for i, n in enumerate(_list(x["basis"], path + ".basis"))]
        if len(set(names)) != len(names):
            raise SchemaError(path + ".basis", "duplicate basis names")
        basis = [(n, 0) for n in names]
    else:
        basis = _basis(x["basis"], path + ".basis")
    idx = _index(n for n, _ in basis)
    table = _table(F, x["bracket"], idx, idx, idx, path + ".bracket")
    named = {(basis[a][0], basis[b][0]): {basis[k][0]: c for k, c in v.items()} for (a, b), v in table.items()}
    return lie_from_names(F, basis, named)


def dump_lie(L: LieSuperalgebra, even_only: bool = False) -> dict:
    F, names = L.field, L.names
    basis: list = list(names) if even_only else [[n, p] for n, p in zip(names, L.parities)]
    return {
        "basis": basis,
        "bracket": [[names[i], names[j], _fmt_vec(F, v, names)] for (i, j), v in sorted(L.bracket.items()) if v],
    }


# -- dual Harish-Chandra pairs --------------------------------------------------------------

def parse_dhcp(x, F: FieldSpec, path: str = "$") -> DHCPData:
    x = _obj(x, path, ("J", "X"), ("action", "bracket"))
    jx = _obj(x["J"], path + ".J", (), ("hopf", "enveloping"))
    if len(jx) != 1:
        raise SchemaError(path + ".J", "give exactly one of 'hopf' or 'enveloping'")
    try:
        if "hopf" in jx:
            J = FiniteJ(parse_hopf(jx["hopf"], F, path + ".J.hopf"))
        else:
            J = EnvelopingJ(parse_lie(jx["enveloping"], F, path + ".J.enveloping", even_only=True))
    except PresentationError as exc:
        raise SchemaError(path + ".J", str(exc)) from None
    X = [_str(n, f"{path}.X[{i}]") for i, n in enumerate(_list(x["X"], path + ".X"))]
    xi, ji = _index(X), _index(J.names)
    action = _table(F, x.get("action", []), xi, ji, xi, path + ".action")
    bracket = _table(F, x.get("bracket", []), xi, xi, ji, path + ".bracket")
    named_a = {(X[a], J.names[b]): {X[k]: c for k, c in v.items()} for (a, b), v in action.items()}
    named_b = {(X[a], X[b]): {J.names[k]: c for k, c in v.items()} for (a, b), v in bracket.items()}
    try:
        P = presentation_from_names(J, X, named_a, named_b)
    except PresentationError as exc:
        raise SchemaError(path, str(exc)) from None
    return DHCPData(P)


def dump_dhcp(d: DHCPData) -> dict:
    P = d.presentation
    J, F, X = P.J, P.field, P.X
    if J.kind == "finite":
        jbody: dict = {"hopf": dump_hopf(J.hopf)}
    else:
        jbody = {"enveloping": dump_lie(J.lie, even_only=True)}
    action = []
    for (x, a), v in sorted(P.action.items()):
        action.append([X[x], J.names[a], _fmt_vec(F, v, X)])
    bracket = []
    for (x, y), v in sorted(P.bracket.items()):
        if not v:
            continue
        if J.kind == "finite":
            vec = _fmt_vec(F, v, J.names)
        else:
            vec = {J.names[w[0]]: F.format(c) for w, c in sorted(v.items())}
        bracket.append([X[x], X[y], vec])
    return {"J": jbody, "X": list(X), "action": action, "bracket": bracket}


# -- Harish-Chandra pairs --------------------------------------------------------------------

def parse_hcp(x, F: FieldSpec, path: str = "$") -> HCPData:
    x = _obj(x, path, ("C", "W"), ("coaction", "bracket"))
    C = parse_hopf(x["C"], F, path + ".C")
    W = [_str(n, f"{path}.W[{i}]") for i, n in enumerate(_list(x["W"], path + ".W"))]
    wi, ci = _index(W), _index(C.names)
    di = _index(f"{n}*" for n in C.names)
    co = x.get("coaction", {})
    if not isinstance(co, dict):
        raise SchemaError(path + ".coaction", "expected an object keyed by W names")
    coaction: dict = {}
    for k, rows in co.items():
        j = _name(k, wi, path + ".coaction")
        row: dict = {}
        for i, item in enumerate(_list(rows, f"{path}.coaction.{k}")):
            p = f"{path}.coaction.{k}[{i}]"
            if not (isinstance(item, list) and len(item) == 3):
                raise SchemaError(p, "expected [w, c, scalar]")
            key = (_name(item[0], wi, p + "[0]"), _name(item[1], ci, p + "[1]"))
            c = _scalar(F, item[2], p + "[2]")
            if c != 0:
                row[key] = row.get(key, F.zero) + c
        coaction[j] = row
    bracket = _table(F, x.get("bracket", []), _index(f"{w}*" for w in W), _index(f"{w}*" for w in W), di, path + ".bracket")
    for (a, b), v in list(bracket.items()):
        bracket.setdefault((b, a), dict(v))
    try:
        return HCPData(C, tuple(W), coaction, bracket)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def dump_hcp(h: HCPData) -> dict:
    F, W, C = h.field, h.W, h.C
    dnames = [f"{n}*" for n in C.names]
    return {
        "C": dump_hopf(C),
        "W": list(W),
        "coaction": {
            W[j]: [[W[k], C.names[c], F.format(x)] for (k, c), x in sorted(h.coaction[j].items())]
            for j in range(h.dim_W)
        },
        "bracket": [[f"{W[i]}*", f"{W[j]}*", _fmt_vec(F, v, dnames)] for (i, j), v in sorted(h.bracket.items())],
    }


# -- documents ----------------------------------------------------------------------------------

_PARSERS = {"hopf": parse_hopf, "lie_superalgebra": parse_lie, "dhcp": parse_dhcp, "hcp": parse_hcp}


def parse_document(raw: Any, field: FieldSpec | str | None = None) -> Document:
    """Validate and build; ``field`` overrides the document's own ``field``.

    Raises :class:`SchemaError` for malformed input and
    :class:`~hcpair.superlin.UnsupportedCharacteristic` for characteristic 2.
    """
    x = _obj(raw, "$", ("kind", "body"), ("name", "field", "description"))
    kind = _str(x["kind"], "$.kind")
    if kind not in KINDS:
        raise SchemaError("$.kind", f"unknown kind {kind!r}; expected one of {list(KINDS)}")
    if field is None:
        text = _str(x.get("field", "Q"), "$.field")
        try:
            F = FieldSpec.from_string(text)
        except FieldError as exc:
            raise SchemaError("$.field", str(exc)) from None
    elif isinstance(field, str):
        F = FieldSpec.from_string(field)
    else:
        F = field
    obj = _PARSERS[kind](x["body"], F, "$.body")
    name = _str(x.get("name", ""), "$.name")
    if isinstance(obj, (DHCPData, HCPData)):
        obj.name = name
    return Document(kind, name, F, obj, _str(x.get("description", ""), "$.description"))


def load(path: str | Path, field: FieldSpec | str | None = None) -> Document:
    return parse_document(load_json(path), field)


def dump_document(doc: Document) -> dict:
    dumpers = {"hopf": dump_hopf, "lie_superalgebra": dump_lie, "dhcp": dump_dhcp, "hcp": dump_hcp}
    out: dict = {"kind": doc.kind}
    if doc.name:
        out["name"] = doc.name
    out["field"] = doc.field.name()
    if doc.description:
        out["description"] = doc.description
    out["body"] = dumpers[doc.kind](doc.obj)
    return out


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "Document",
    "KINDS",
    "SchemaError",
    "dump_dhcp",
    "dump_document",
    "dump_hcp",
    "dump_hopf",
    "dump_lie",
    "dumps",
    "load",
    "load_json",
    "parse_document",
    "parse_dhcp",
    "parse_hcp",
    "parse_hopf",
    "parse_lie",
]
