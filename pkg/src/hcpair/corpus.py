"""The bundled example corpus.

Every entry is built here from the constructors and also shipped as a JSON
file under ``hcpair/corpus``; ``regenerate`` rewrites those files and the
tests check that they stay in sync.  Entries without a declared prime are
field-agnostic: their structure constants are integers and they parse over
any admissible field.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .dhcp import DHCPData
from .hcp import HCPData
from .hopfcore import (
    cyclic_group,
    dual,
    exterior_algebra,
    function_algebra,
    group_algebra,
    permutation_sign,
    symmetric_group,
    trivial_hopf,
    truncated_polynomial,
    z2_smash_exterior,
)
from .io import Document, dump_document, dumps, parse_document
from .lie import lie_from_names
from .rewrite import EnvelopingJ, FiniteJ, presentation_from_names
from .superlin import FieldSpec, QQ


@dataclass(frozen=True)
class Entry:
    """``expect`` is ``"valid"`` or ``"invalid"``; ``prime`` pins the field."""

    filename: str
    kind: str
    build: Callable[[FieldSpec], object]
    expect: str = "valid"
    prime: int | None = None
    description: str = ""

    def field(self) -> FieldSpec:
        return FieldSpec.prime(self.prime) if self.prime else QQ

    def document(self, field: FieldSpec | None = None) -> Document:
        F = field or self.field()
        return Document(self.kind, self.filename[:-5], F, self.build(F), self.description)


# -- dual pairs and Lie superalgebras -----------------------------------------------------------------------

def _z2_sign_pair(F: FieldSpec) -> DHCPData:
    J = FiniteJ(group_algebra(*cyclic_group(2), F))
    return DHCPData(presentation_from_names(J, ["x"], {("x", "g"): {"x": "-1"}}, {}))


def _z2_two(F: FieldSpec) -> DHCPData:
    J = FiniteJ(group_algebra(*cyclic_group(2), F))
    return DHCPData(presentation_from_names(J, ["x", "y"], {("y", "g"): {"y": "-1"}}, {}))


def _trivial_pair(F: FieldSpec) -> DHCPData:
    return DHCPData(presentation_from_names(FiniteJ(trivial_hopf(F)), ["x"], {}, {}))


def _s3_sign_pair(F: FieldSpec) -> DHCPData:
    names, table = symmetric_group(3)
    J = FiniteJ(group_algebra(names, table, F))
    action = {("x", g): {"x": str(permutation_sign(g))} for g in names}
    return DHCPData(presentation_from_names(J, ["x"], action, {}))


def _z3_rotation_pair(F: FieldSpec) -> DHCPData:
    # kZ/3 permuting two odd letters cyclically through x -> y -> -x-y
    J = FiniteJ(group_algebra(*cyclic_group(3), F))
    g, g2 = J.names[1], J.names[2]
    action = {
        ("x", g): {"y": "1"},
        ("y", g): {"x": "-1", "y": "-1"},
        ("x", g2): {"x": "-1", "y": "-1"},
        ("y", g2): {"x": "1"},
    }
    return DHCPData(presentation_from_names(J, ["x", "y"], action, {}))


def _bad_module(F: FieldSpec) -> DHCPData:
    J = FiniteJ(group_algebra(*cyclic_group(2), F))
    return DHCPData(presentation_from_names(J, ["x"], {("x", "g"): {"x": "3"}}, {}))


def _charp_pair(F: FieldSpec) -> DHCPData:
    J = FiniteJ(dual(truncated_polynomial(F)))
    return DHCPData(presentation_from_names(J, ["x"], {}, {("x", "x"): {"t*": "1"}}))


def _charp_broken(F: FieldSpec) -> DHCPData:
    J = FiniteJ(dual(truncated_polynomial(F)))
    return DHCPData(presentation_from_names(J, ["u", "v"], {("u", "t*"): {"v": "1"}}, {("u", "u"): {"t*": "1"}}))


def _broken_c(F: FieldSpec) -> DHCPData:
    J = EnvelopingJ(lie_from_names(F, [("h", 0)], {}))
    return DHCPData(presentation_from_names(J, ["v"], {("v", "h"): {"v": "1"}}, {("v", "v"): {"h": "1"}}))


def _heisenberg_odd(F: FieldSpec) -> DHCPData:
    # U(kh) with h central, two odd letters and [x, y] = h
    J = EnvelopingJ(lie_from_names(F, [("h", 0)], {}))
    return DHCPData(presentation_from_names(J, ["x", "y"], {}, {("x", "y"): {"h": "1"}}))


def _gl11(F: FieldSpec):
    basis = [("E11", 0), ("E22", 0), ("E12", 1), ("E21", 1)]
    table = {
        ("E11", "E12"): {"E12": "1"},
        ("E22", "E12"): {"E12": "-1"},
        ("E11", "E21"): {"E21": "-1"},
        ("E22", "E21"): {"E21": "1"},
        ("E12", "E21"): {"E11": "1", "E22": "1"},
    }
    return lie_from_names(F, basis, table)


def _osp12(F: FieldSpec):
    basis = [("h", 0), ("e", 0), ("f", 0), ("x", 1), ("y", 1)]
    table = {
        ("h", "e"): {"e": "2"},
        ("h", "f"): {"f": "-2"},
        ("e", "f"): {"h": "1"},
        ("h", "x"): {"x": "1"},
        ("h", "y"): {"y": "-1"},
        ("e", "y"): {"x": "-1"},
        ("f", "x"): {"y": "-1"},
        ("x", "x"): {"e": "2"},
        ("y", "y"): {"f": "-2"},
        ("x", "y"): {"h": "1"},
    }
    return lie_from_names(F, basis, table)


def _jacobi_broken(F: FieldSpec):
    basis = [("h", 0), ("x", 1)]
    return lie_from_names(F, basis, {("h", "x"): {"x": "1"}, ("x", "x"): {"h": "1"}})


# -- Harish-Chandra pairs -----------------------------------------------------------------------

def _z2_functions(F: FieldSpec):
    return function_algebra(*cyclic_group(2), F)


def _hcp_trivial(F: FieldSpec) -> HCPData:
    return HCPData(trivial_hopf(F), ("w",))


def _hcp_trivial3(F: FieldSpec) -> HCPData:
    return HCPData(trivial_hopf(F), ("u", "v", "w"))


def _hcp_z2(F: FieldSpec) -> HCPData:
    one = F.one
    return HCPData(_z2_functions(F), ("w",), {0: {(0, 0): one, (0, 1): -one}})


def _hcp_z2_mixed(F: FieldSpec) -> HCPData:
    one = F.one
    return HCPData(_z2_functions(F), ("a", "b"), {1: {(1, 0): one, (1, 1): -one}})


def _hcp_s3_sign(F: FieldSpec) -> HCPData:
    names, table = symmetric_group(3)
    C = function_algebra(names, table, F)
    row = {(0, i): F(permutation_sign(g)) for i, g in enumerate(names)}
    return HCPData(C, ("w",), {0: row})


def _hcp_charp(F: FieldSpec) -> HCPData:
    C = truncated_polynomial(F)
    return HCPData(C, ("w",), {}, {(0, 0): {C.names.index("t"): F.one}})


def _unipotent(F: FieldSpec, bracket=None) -> HCPData:
    C = truncated_polynomial(F)
    t, one = C.names.index("t"), F.one
    return HCPData(C, ("u", "v"), {0: {(0, 0): one}, 1: {(1, 0): one, (0, t): one}}, bracket or {})


def _hcp_unipotent(F: FieldSpec) -> HCPData:
    return _unipotent(F)


def _hcp_broken_colinear(F: FieldSpec) -> HCPData:
    t = truncated_polynomial(F).names.index("t")
    return _unipotent(F, {(1, 1): {t: F.one}})


def _hcp_broken_selfbracket(F: FieldSpec) -> HCPData:
    t = truncated_polynomial(F).names.index("t")
    return _unipotent(F, {(0, 0): {t: F.one}})


def _hcp_broken_coaction(F: FieldSpec) -> HCPData:
    return HCPData(_z2_functions(F), ("w",), {0: {(0, 0): F.one, (0, 1): F(3)}})


ENTRIES: tuple[Entry, ...] = (
    Entry("trivial_hopf.json", "hopf", trivial_hopf),
    Entry("z2_group.json", "hopf", lambda F: group_algebra(*cyclic_group(2), F)),
    Entry("z2_functions.json", "hopf", _z2_functions),
    Entry("z3_group.json", "hopf", lambda F: group_algebra(*cyclic_group(3), F)),
    Entry("z3_functions.json", "hopf", lambda F: function_algebra(*cyclic_group(3), F)),
    Entry("s3_group.json", "hopf", lambda F: group_algebra(*symmetric_group(3), F)),
    Entry("s3_functions.json", "hopf", lambda F: function_algebra(*symmetric_group(3), F)),
    Entry("wedge1.json", "hopf", lambda F: exterior_algebra(1, F)),
    Entry("wedge2.json", "hopf", lambda F: exterior_algebra(2, F)),
    Entry("wedge3.json", "hopf", lambda F: exterior_algebra(3, F)),
    Entry("wedge4.json", "hopf", lambda F: exterior_algebra(4, F)),
    Entry("z2_smash_wedge.json", "hopf", z2_smash_exterior),
    Entry("truncated_f3.json", "hopf", truncated_polynomial, prime=3),
    Entry("truncated_f5.json", "hopf", truncated_polynomial, prime=5),
    Entry("truncated_dual_f3.json", "hopf", lambda F: dual(truncated_polynomial(F)), prime=3),
    Entry("trivial_pair.json", "dhcp", _trivial_pair),
    Entry("z2_pair.json", "dhcp", _z2_sign_pair, description="kZ/2 acting on one odd letter by the sign"),
    Entry("z2_two_letters.json", "dhcp", _z2_two),
    Entry("z3_rotation_pair.json", "dhcp", _z3_rotation_pair),
    Entry("s3_sign_pair.json", "dhcp", _s3_sign_pair),
    Entry("charp_pair_f3.json", "dhcp", _charp_pair, prime=3, description="[x, x] = t* over F_3"),
    Entry("charp_pair_f5.json", "dhcp", _charp_pair, prime=5),
    Entry("heisenberg_odd.json", "dhcp", _heisenberg_odd),
    Entry("broken_c.json", "dhcp", _broken_c, "invalid", description="v◁h = v with [v, v] = h"),
    Entry("broken_module.json", "dhcp", _bad_module, "invalid"),
    Entry("charp_broken_f3.json", "dhcp", _charp_broken, "invalid", prime=3),
    Entry("gl11.json", "lie_superalgebra", _gl11),
    Entry("osp12.json", "lie_superalgebra", _osp12),
    Entry("jacobi_broken.json", "lie_superalgebra", _jacobi_broken, "invalid"),
    Entry("trivial_hcp.json", "hcp", _hcp_trivial),
    Entry("trivial3_hcp.json", "hcp", _hcp_trivial3),
    Entry("z2_hcp.json", "hcp", _hcp_z2, description="functions on Z/2 coacting on one odd line by the sign"),
    Entry("z2_mixed_hcp.json", "hcp", _hcp_z2_mixed),
    Entry("s3_sign_hcp.json", "hcp", _hcp_s3_sign),
    Entry("charp_hcp_f3.json", "hcp", _hcp_charp, prime=3),
    Entry("charp_hcp_f5.json", "hcp", _hcp_charp, prime=5),
    Entry("unipotent_hcp_f3.json", "hcp", _hcp_unipotent, prime=3),
    Entry("unipotent_hcp_f5.json", "hcp", _hcp_unipotent, prime=5),
    Entry("broken_colinear_f3.json", "hcp", _hcp_broken_colinear, "invalid", prime=3),
    Entry("broken_selfbracket_f3.json", "hcp", _hcp_broken_selfbracket, "invalid", prime=3),
    Entry("broken_coaction.json", "hcp", _hcp_broken_coaction, "invalid"),
)


def corpus_dir() -> Path:
    return Path(str(resources.files("hcpair") / "corpus"))


def entry(filename: str) -> Entry:
    for e in ENTRIES:
        if e.filename == filename:
            return e
    raise KeyError(filename)


def load_entry(e: Entry, field: FieldSpec | None = None) -> Document:
    """Parse the shipped JSON file of ``e`` (optionally over another field)."""
    from .io import load

    return load(corpus_dir() / e.filename, field)


def admissible_fields(e: Entry) -> list[FieldSpec]:
    """Fields over which an entry is meant to be read: its prime, or Q, F_3 and F_5."""
    if e.prime:
        return [FieldSpec.prime(e.prime)]
    if e.kind == "lie_superalgebra":
        return [QQ, FieldSpec.prime(5)]
    return [QQ, FieldSpec.prime(3), FieldSpec.prime(5)]


def regenerate(directory: Path | None = None) -> list[Path]:
    directory = directory or corpus_dir()
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for e in ENTRIES:
        raw = dump_document(e.document())
        parse_document(raw)
        path = directory / e.filename
        path.write_text(dumps(raw), encoding="utf-8")
        out.append(path)
    return out


if __name__ == "__main__":  # pragma: no cover
    for p in regenerate():
        print(p)
