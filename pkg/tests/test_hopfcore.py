from __future__ import annotations

import copy
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcpair.hopfcore import (
    HopfSuperAlgebraData,
    MorphismData,
    algebra_radical,
    coradical,
    cyclic_group,
    dual,
    evaluation_morphism,
    exterior_algebra,
    function_algebra,
    group_algebra,
    is_irreducible,
    is_semisimple_algebra,
    check_smash_coradical,
    permutation_sign,
    primitive_space,
    primitives,
    quotient,
    restrict,
    smash_coproduct_Z2,
    symmetric_group,
    trivial_hopf,
    truncated_polynomial,
    underline,
    verify_hopf,
    verify_hopf_pairing,
    verify_super_cocommutative,
    verify_super_commutative,
    z2_smash_exterior,
)
from hcpair.superlin import FieldSpec, QQ
from hcpair.superlin.linalg import Subspace

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
FIELDS = [QQ, F3, F5]


def _builders(F):
    return {
        "k": trivial_hopf(F),
        "kZ2": group_algebra(*cyclic_group(2), F),
        "kZ3": group_algebra(*cyclic_group(3), F),
        "kS3": group_algebra(*symmetric_group(3), F),
        "k^Z3": function_algebra(*cyclic_group(3), F),
        "k^S3": function_algebra(*symmetric_group(3), F),
        "wedge3": exterior_algebra(3, F),
        "smash": z2_smash_exterior(F),
    }


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name())
def test_corpus_algebras_are_hopf(F):
    for name, h in _builders(F).items():
        assert verify_hopf(h).passed, name
        assert verify_hopf(dual(h)).passed, name


def test_commutativity_flags():
    b = _builders(QQ)
    assert verify_super_commutative(b["k^S3"]).passed
    assert not verify_super_cocommutative(b["k^S3"]).passed
    assert not verify_super_commutative(b["kS3"]).passed
    assert verify_super_commutative(b["wedge3"]).passed and verify_super_cocommutative(b["wedge3"]).passed
    assert verify_super_cocommutative(b["smash"]).passed
    assert not verify_super_commutative(b["smash"]).passed


def test_double_dual_is_canonically_isomorphic():
    for h in _builders(F5).values():
        assert evaluation_morphism(h).verify_isomorphism().passed


@pytest.mark.parametrize("F,ss", [(QQ, True), (F5, True), (F3, False)], ids=["Q", "F5", "F3"])
def test_maschke_for_cyclic_group(F, ss):
    assert is_semisimple_algebra(group_algebra(*cyclic_group(3), F)) is ss


def _is_nilpotent(h, x):
    y = dict(x)
    for _ in range(h.dim):
        y = h.mul(y, x)
    return not y


def _brute_radical_dim(h):
    """``{x : xy nilpotent for every y}`` by enumerating all of a small algebra over F_p."""
    F = h.field
    elems = [{i: F(c) for i, c in enumerate(t) if c} for t in product(range(F.characteristic), repeat=h.dim)]
    rad = [x for x in elems if all(_is_nilpotent(h, h.mul(x, y)) for y in elems)]
    return Subspace(rad).dim


@pytest.mark.parametrize("name", ["smash", "dual smash", "kZ3", "wedge2"])
def test_small_characteristic_radical_matches_enumeration(name):
    h = {
        "smash": z2_smash_exterior(F3),
        "dual smash": dual(z2_smash_exterior(F3)),
        "kZ3": group_algebra(*cyclic_group(3), F3),
        "wedge2": exterior_algebra(2, F3),
    }[name]
    assert len(algebra_radical(h)) == _brute_radical_dim(h)


def test_noncommutative_radical_in_small_characteristic():
    # F3[S3] has two simple modules (trivial, sign), so its radical has dim 6 - 2
    h = group_algebra(*symmetric_group(3), F3)
    rad = algebra_radical(h)
    assert len(rad) == 4
    S = Subspace(rad)
    assert all(S.contains(h.mul(a, h.e(j))) and S.contains(h.mul(h.e(j), a)) for a in rad for j in range(6))
    assert is_semisimple_algebra(group_algebra(*symmetric_group(3), F5))
    assert is_semisimple_algebra(group_algebra(*symmetric_group(3), QQ))


def test_exterior_algebra_structure():
    for n in range(1, 5):
        h = exterior_algebra(n, QQ)
        assert h.dim == 2 ** n
        assert is_irreducible(h)
        assert len(algebra_radical(h)) == 2 ** n - 1
        p = primitives(h)
        assert p.report.passed
        assert len(p.odd()) == n and not p.even()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name())
def test_irreducibility_methods_agree(F):
    for h in list(_builders(F).values()) + [truncated_polynomial(F5), truncated_polynomial(F3)]:
        for x in (h, dual(h)):
            assert is_irreducible(x) == is_irreducible(x, method="coradical")


def test_coradicals():
    assert len(coradical(group_algebra(*symmetric_group(3), QQ))) == 6
    assert len(coradical(exterior_algebra(3, QQ))) == 1
    assert len(coradical(function_algebra(*cyclic_group(3), QQ))) == 3
    # functions on a p-group in characteristic p: only the trivial simple comodule
    assert len(coradical(function_algebra(*cyclic_group(3), F3))) == 1
    assert not is_irreducible(function_algebra(*cyclic_group(3), F5))
    assert is_irreducible(truncated_polynomial(F3))
    assert primitive_space(truncated_polynomial(F5)) == [{1: F5.one}]


def test_smash_coradical_on_smash_exterior():
    assert check_smash_coradical(z2_smash_exterior(QQ)).passed


def test_underline_of_smash_is_group_algebra():
    sub = underline(z2_smash_exterior(QQ))
    assert sub.algebra.dim == 2
    assert sub.algebra.is_purely_even()


def test_restriction_and_quotient_of_exterior_algebra():
    h = exterior_algebra(2, QQ)
    one = QQ.one
    idx = {n: i for i, n in enumerate(h.names)}
    sub = restrict(h, [{idx["1"]: one}, {idx["x1"]: one}], ["1", "x1"])
    assert verify_hopf(sub.algebra).passed
    q = quotient(h, [{idx["x2"]: one}, {idx["x1x2"]: one}])
    assert q.algebra.dim == 2
    assert verify_hopf(q.algebra).passed


def test_group_homomorphism_gives_hopf_map():
    s3 = group_algebra(*symmetric_group(3), QQ)
    z2 = group_algebra(*cyclic_group(2), QQ)
    images = [{0 if permutation_sign(g) == 1 else 1: QQ.one} for g in s3.names]
    m = MorphismData(s3, z2, images)
    assert m.verify().passed
    assert m.is_surjective() and not m.is_injective()


def test_dual_pairing_is_hopf_pairing():
    for h in _builders(F3).values():
        eye = [[h.field.one if i == k else h.field.zero for k in range(h.dim)] for i in range(h.dim)]
        assert verify_hopf_pairing(dual(h), h, eye).passed


def test_wrong_pairing_is_detected():
    h = exterior_algebra(2, QQ)
    bad = [[QQ.one if i == k else QQ.zero for k in range(h.dim)] for i in range(h.dim)]
    bad[3][3] = QQ(2)
    assert not verify_hopf_pairing(dual(h), h, bad).passed


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 35), st.integers(0, 5), st.integers(1, 4))
def test_perturbed_structure_constants_are_detected(pair, target, c):
    h = group_algebra(*symmetric_group(3), F5)
    i, j = divmod(pair, 6)
    mult = copy.deepcopy(h.mult)
    row = mult.setdefault((i, j), {})
    row[target] = row.get(target, F5.zero) + F5(c)
    bad = HopfSuperAlgebraData.build(F5, list(zip(h.names, h.parity)), mult, h.unit, h.comult, h.counit, h.antipode)
    assert not verify_hopf(bad).passed


def test_parity_violation_is_detected():
    h = exterior_algebra(1, QQ)
    mult = dict(h.mult)
    mult[(1, 1)] = {0: QQ.one}  # x*x = 1 mixes parities
    bad = HopfSuperAlgebraData.build(QQ, [("1", 0), ("x", 1)], mult, h.unit, h.comult, h.counit, h.antipode)
    assert not verify_hopf(bad).passed


def test_irreducible_with_even_primitives_is_purely_even():
    seen = 0
    for F in FIELDS:
        for h in _builders(F).values():
            for x in (h, dual(h)):
                if is_irreducible(x) and not primitives(x).odd():
                    seen += 1
                    assert x.is_purely_even()
    assert seen >= 3


def test_function_algebras_small_examples():
    assert is_semisimple_algebra(function_algebra(*cyclic_group(3), F3))
    assert primitive_space(function_algebra(*cyclic_group(2), QQ)) == []
    assert primitive_space(group_algebra(*cyclic_group(2), QQ)) == []


def test_smash_coproduct_on_one_odd_letter():
    s = smash_coproduct_Z2(exterior_algebra(1, QQ))
    assert s.names == ("0⊗1", "0⊗x", "1⊗1", "1⊗x")
    # the odd leg shifts the group index of the right factor
    assert s.comult[1] == {(0, 1): QQ.one, (1, 2): QQ.one}
    assert s.counit[1] == 0 and s.counit[3] == 0
