from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcpair.corpus import ENTRIES, admissible_fields, entry
from hcpair.freegraded import wedge_basis
from hcpair.hcp import (
    HCPData,
    HCPError,
    HCPMorphism,
    associated_dhcp,
    beta_roundtrip,
    build_A,
    check_conormal,
    check_short_exact_hcp,
    coinvariant_quotient,
    coinvariants,
    identity_morphism,
    odd_primitive_check,
    pair_H_A,
    psi_prime,
    recover_hcp,
    roundtrip_hcp,
    unipotence_check,
    verify_hcp,
)
from hcpair.hopfcore import (
    MorphismData,
    cyclic_group,
    exterior_algebra,
    function_algebra,
    symmetric_group,
    trivial_hopf,
    verify_hopf,
    verify_super_commutative,
)
from hcpair.superlin import FieldSpec, QQ

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)

VALID = [e for e in ENTRIES if e.kind == "hcp" and e.expect == "valid"]
INVALID = [e for e in ENTRIES if e.kind == "hcp" and e.expect == "invalid"]

# frozen: dim C * 2^dim W, checked against an explicit count in the test below
DIMS = {
    "trivial_hcp.json": 2,
    "trivial3_hcp.json": 8,
    "z2_hcp.json": 4,
    "z2_mixed_hcp.json": 8,
    "s3_sign_hcp.json": 12,
    "charp_hcp_f3.json": 6,
    "charp_hcp_f5.json": 10,
    "unipotent_hcp_f3.json": 12,
    "unipotent_hcp_f5.json": 20,
}


def _h(name, F=None):
    return entry(name).document(F).obj


def _cases():
    for e in VALID:
        for F in admissible_fields(e):
            yield pytest.param(e.filename, F, id=f"{e.filename}-{F.name()}")


@pytest.mark.parametrize("name,F", list(_cases()))
def test_build_A_on_corpus(name, F):
    h = _h(name, F)
    assert verify_hcp(h).passed
    a = build_A(h)
    assert a.dim == DIMS[name] == h.C.dim * 2 ** h.dim_W
    assert set(a.residuals.values()) == {0}
    assert verify_hopf(a.hopf).passed
    assert verify_super_commutative(a.hopf).passed
    assert psi_prime(a).report.passed
    assert psi_prime(a, list(reversed(range(h.dim_W)))).report.passed


@pytest.mark.parametrize("name", [e.filename for e in INVALID])
def test_invalid_pairs_are_rejected(name):
    e = entry(name)
    rep = verify_hcp(e.document().obj)
    assert not rep.passed


def test_broken_cases_fail_the_expected_checks():
    failed = {c.name for c in verify_hcp(_h("broken_colinear_f3.json")).failures()}
    assert "(a) colinear" in failed
    failed = {c.name for c in verify_hcp(_h("broken_selfbracket_f3.json")).failures()}
    assert "dual pair: (c) self-bracket" in failed
    failed = {c.name for c in verify_hcp(_h("broken_coaction.json")).failures()}
    assert "comodule coassociativity" in failed


def test_trivial_C_gives_exterior_algebra():
    h = _h("trivial3_hcp.json")
    a = build_A(h)
    wedge = exterior_algebra(["u", "v", "w"], QQ)
    images = [{a.index(0, S): QQ.one} for S in wedge_basis(3)]
    assert MorphismData(wedge, a.hopf, images).verify_isomorphism().passed


def test_pairing_with_H_side():
    for name, F in (("z2_hcp.json", QQ), ("charp_hcp_f3.json", None), ("unipotent_hcp_f3.json", None)):
        h = _h(name, F)
        p = pair_H_A(associated_dhcp(h), build_A(h))
        assert p.report.passed, name
        assert p.pairing.entry(p.h.hopf.names[0], build_A(h).hopf.names[0]) == h.field.one


@pytest.mark.parametrize("name", ["z2_mixed_hcp.json", "s3_sign_hcp.json", "charp_hcp_f5.json", "unipotent_hcp_f3.json"])
def test_round_trips(name):
    h = _h(name)
    assert roundtrip_hcp(h)[1].passed
    assert beta_roundtrip(build_A(h).hopf).report.passed


def test_recovered_bracket_in_characteristic_p():
    h = _h("charp_hcp_f3.json")
    rec = recover_hcp(build_A(h).hopf)
    assert rec.pair.dim_W == 1
    assert rec.pair.bracket[(0, 0)]


def test_unipotence_flags():
    assert unipotence_check(build_A(_h("unipotent_hcp_f3.json")).hopf) == {
        "A_irreducible": True,
        "Abar_irreducible": True,
        "agree": True,
    }
    assert unipotence_check(build_A(_h("s3_sign_hcp.json")).hopf)["A_irreducible"] is False


def test_coinvariants_give_odd_primitives():
    h = _h("unipotent_hcp_f3.json")
    assert coinvariants(h) == [{0: F3.one}]
    assert odd_primitive_check(h).passed
    assert coinvariants(_h("z2_hcp.json")) == []


def test_coinvariant_quotient_and_exactness():
    h = _h("z2_mixed_hcp.json")
    m = coinvariant_quotient(h, 0)
    assert m.verify().passed
    assert check_conormal(m, direct=True).conormal
    with pytest.raises(HCPError):
        coinvariant_quotient(h, 1)
    k = HCPData(trivial_hopf(QQ), ())
    inc = HCPMorphism(k, h, [dict(h.C.unit)], [])
    assert check_short_exact_hcp(inc, identity_morphism(h)).passed


def _restriction(subgroup, target):
    names, table = symmetric_group(3)
    S3 = function_algebra(names, table, QQ)
    f = [{subgroup[g]: QQ.one} if g in subgroup else {} for g in names]
    return HCPMorphism(HCPData(S3, ()), HCPData(target, ()), f, [])


def test_restriction_to_normal_subgroup_is_conormal():
    z3 = function_algebra(*cyclic_group(3), QQ)
    m = _restriction({"123": 0, "231": 1, "312": 2}, z3)
    assert m.verify().passed
    assert check_conormal(m, direct=True).conormal


def test_restriction_to_non_normal_subgroup_is_not_conormal():
    z2 = function_algebra(*cyclic_group(2), QQ)
    r = check_conormal(_restriction({"123": 0, "213": 1}, z2), direct=True)
    assert not r.conormal
    assert r.report["criteria agree"].passed


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 4), st.integers(1, 4))
def test_valid_variants_of_the_unipotent_pair_build(a, s):
    C = _h("unipotent_hcp_f5.json").C
    t = C.names.index("t")
    one = F5.one
    coaction = {0: {(0, 0): one}, 1: {(1, 0): one, (0, t): F5(s)}}
    bracket = {(0, 0): {t: F5(a)}} if a else {}
    h = HCPData(C, ("u", "v"), coaction, bracket)
    if not verify_hcp(h).passed:
        return
    A = build_A(h)
    assert A.dim == 20
    assert set(A.residuals.values()) == {0}
    assert verify_hopf(A.hopf).passed
