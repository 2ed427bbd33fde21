from __future__ import annotations

import pytest

from hcpair.corpus import ENTRIES, admissible_fields, entry
from hcpair.dhcp import (
    EnvelopingH,
    LieAxiomError,
    PairMorphism,
    alpha_roundtrip,
    build_H,
    check_morphism_normal,
    check_short_exact_dhcp,
    check_square_identity,
    from_lie_superalgebra,
    pbw_rank,
    recover_pair,
    roundtrip_pair,
    verify_dhcp,
)
from hcpair.hopfcore import verify_hopf, verify_super_cocommutative, z2_smash_exterior
from hcpair.superlin import FieldSpec, QQ, UnsupportedCharacteristic

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)

FINITE = [e for e in ENTRIES if e.kind == "dhcp" and e.expect == "valid" and e.filename not in ("heisenberg_odd.json",)]


def _d(name, F=QQ):
    return entry(name).document(F).obj


def _cases():
    for e in FINITE:
        for F in admissible_fields(e):
            yield pytest.param(e.filename, F, id=f"{e.filename}-{F.name()}")


@pytest.mark.parametrize("name,F", list(_cases()))
def test_valid_pairs_build_hopf_superalgebras(name, F):
    d = _d(name, F)
    assert verify_dhcp(d).passed
    h = build_H(d)
    assert h.hopf.dim == d.J.dim * 2 ** d.dim_V
    assert verify_hopf(h.hopf).passed
    assert verify_super_cocommutative(h.hopf).passed
    assert pbw_rank(d).passed
    assert check_square_identity(h).passed


def test_broken_pairs_name_the_failing_condition():
    assert [c.name for c in verify_dhcp(_d("broken_module.json")).failures()][0] == "module"
    assert "(c) self-bracket" in [c.name for c in verify_dhcp(_d("broken_c.json")).failures()]
    failed = [c.name for c in verify_dhcp(_d("charp_broken_f3.json", F3)).failures()]
    assert "(c) self-bracket" in failed


@pytest.mark.parametrize("name", ["z2_pair.json", "z3_rotation_pair.json", "s3_sign_pair.json"])
def test_round_trips_are_isomorphisms(name):
    d = _d(name, F5)
    m, rep = roundtrip_pair(d)
    assert rep.passed
    _, rep2 = alpha_roundtrip(build_H(d).hopf)
    assert rep2.passed


def test_recover_pair_from_smash_exterior():
    rec = recover_pair(z2_smash_exterior(QQ))
    assert rec.pair.J.dim == 2 and rec.pair.dim_V == 1
    assert verify_dhcp(rec.pair).passed
    assert rec.pair.presentation.act_letter(0, 1) == {0: QQ(-1)}


def test_lie_superalgebra_pairs():
    for name in ("gl11.json", "osp12.json"):
        L = entry(name).document(QQ).obj
        d = from_lie_superalgebra(L)
        assert verify_dhcp(d).passed
        assert EnvelopingH(d).verify_upto(2).passed
        assert EnvelopingH(d).kostant_check(3).passed
    assert from_lie_superalgebra(entry("osp12.json").document(QQ).obj).X == ("x", "y")


def test_characteristic_three_rejects_lie_superalgebras():
    with pytest.raises(UnsupportedCharacteristic, match=r"condition \(c\)"):
        from_lie_superalgebra(entry("gl11.json").document(F3).obj)


def test_jacobi_failure_raises():
    with pytest.raises(LieAxiomError):
        from_lie_superalgebra(entry("jacobi_broken.json").document(QQ).obj)


def _inclusion(g):
    src, tgt = _d("trivial_pair.json"), _d("z2_two_letters.json")
    return PairMorphism(src, tgt, [{0: QQ.one}], [g])


def test_normal_and_non_normal_inclusions():
    assert check_morphism_normal(_inclusion({1: QQ.one})).normal
    res = check_morphism_normal(_inclusion({0: QQ.one, 1: QQ.one}))
    assert not res.normal
    assert res.failed_condition == "(ii) stable image"


def test_short_exact_sequence_of_pairs():
    one = QQ.one
    triv, two, sign = _d("trivial_pair.json"), _d("z2_two_letters.json"), _d("z2_pair.json")
    m1 = PairMorphism(triv, two, [{0: one}], [{0: one}])
    m2 = PairMorphism(two, sign, [{0: one}, {1: one}], [{}, {0: one}])
    assert check_short_exact_dhcp(m1, m2).passed
    bad = PairMorphism(two, sign, [{0: one}, {1: one}], [{0: one}, {}])
    assert not check_short_exact_dhcp(m1, bad).passed
