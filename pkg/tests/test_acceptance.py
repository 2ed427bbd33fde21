"""Acceptance battery; each test carries a ``criterion`` marker summarized at the end of the run."""
from __future__ import annotations

import time
from functools import lru_cache

import pytest
from click.testing import CliRunner

from hcpair.cli import main
from hcpair.corpus import ENTRIES, admissible_fields, corpus_dir, entry
from hcpair.dhcp import (
    EnvelopingH,
    alpha_roundtrip,
    build_H,
    from_lie_superalgebra,
    pbw_rank,
    roundtrip_pair,
    verify_dhcp,
)
from hcpair.freegraded import canonical_pairing, gram_matrix, verify_T_Tc_pairing, wedge_basis
from hcpair.hcp import (
    beta_roundtrip,
    build_A,
    coinvariants,
    odd_primitive_check,
    roundtrip_hcp,
    unipotence_check,
)
from hcpair.hopfcore import (
    dual,
    exterior_algebra,
    is_irreducible,
    is_semisimple_algebra,
    check_smash_coradical,
    verify_hopf,
    verify_hopf_pairing,
    verify_super_cocommutative,
    verify_super_commutative,
)
from hcpair.rewrite import check_overlaps
from hcpair.superlin import QQ, FieldSpec, UnsupportedCharacteristic, determinant

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


def _valid(kind):
    return [e for e in ENTRIES if e.kind == kind and e.expect == "valid"]


def _finite_pairs():
    for e in _valid("dhcp"):
        for F in admissible_fields(e):
            d = e.document(F).obj
            if d.J.kind == "finite":
                yield e.filename, d


def _pairs():
    for e in _valid("hcp"):
        for F in admissible_fields(e):
            yield e.filename, e.document(F).obj


def _build_corpus():
    """Every finite Hopf superalgebra in the corpus, with the flag it must satisfy."""
    out = []
    for e in _valid("hopf"):
        for F in admissible_fields(e):
            out.append((f"{e.filename}/{F.name()}", e.document(F).obj, None))
    for name, d in _finite_pairs():
        out.append((f"H({name})/{d.field.name()}", build_H(d).hopf, "cocommutative"))
    for name, h in _pairs():
        out.append((f"A({name})/{h.field.name()}", build_A(h).hopf, "commutative"))
    return out


@lru_cache(maxsize=None)
def _corpus():
    return tuple(_build_corpus())


@pytest.mark.criterion(1, "Hopf axiom suite on the full corpus over Q, F3, F5 in under 10 s")
def test_hopf_axiom_suite():
    t0 = time.perf_counter()
    corpus = _build_corpus()
    for label, h, flag in corpus:
        assert verify_hopf(h).passed, label
        comm = verify_super_commutative(h).passed
        cocomm = verify_super_cocommutative(h).passed
        if flag == "commutative":
            assert comm, label
        elif flag == "cocommutative":
            assert cocomm, label
        else:
            assert comm or cocomm, label
        hd = dual(h)
        assert verify_hopf(hd).passed, label
        assert verify_super_commutative(hd).passed == cocomm, label
        assert verify_super_cocommutative(hd).passed == comm, label
    elapsed = time.perf_counter() - t0
    assert len(corpus) > 60
    assert elapsed < 10, f"{elapsed:.1f}s"


@pytest.mark.criterion(2, "PBW dimension and J-freeness of the wedge words")
def test_pbw_dimension_and_rank():
    for name, d in _finite_pairs():
        assert build_H(d).hopf.dim == d.J.dim * 2 ** d.dim_V, name
        assert pbw_rank(d).passed, name


def _lie_pairs():
    for e in ENTRIES:
        if e.kind != "lie_superalgebra" or e.expect != "valid":
            continue
        for F in admissible_fields(e):
            yield e.filename, from_lie_superalgebra(e.document(F).obj)


@pytest.mark.criterion(3, "overlaps resolve exactly for valid pairs; the [v,v]=h counterexample fails both")
def test_confluence_matches_verification():
    seen = set()
    for e in ENTRIES:
        if e.kind != "dhcp":
            continue
        for F in admissible_fields(e):
            d = e.document(F).obj
            ok = verify_dhcp(d).passed
            assert check_overlaps(d.presentation).passed == ok, (e.filename, F.name())
            seen.add(ok)
    for name, d in _lie_pairs():
        assert verify_dhcp(d).passed and check_overlaps(d.presentation).passed, name
    assert seen == {True, False}

    d = entry("broken_c.json").document().obj
    dhcp_fail = {tuple(c.witness["basis"]) for c in verify_dhcp(d).failures()}
    overlap_fail = {tuple(c.name.split(":")[1].split(",")) for c in check_overlaps(d.presentation).failures()}
    assert overlap_fail
    assert overlap_fail <= dhcp_fail
    assert ("v",) in dhcp_fail


@pytest.mark.criterion(4, "canonical pairing: invertible Gram matrices and Hopf-pairing laws")
def test_canonical_pairing():
    for n in range(1, 6):
        for k in range(n + 1):
            g = gram_matrix(n, k)
            assert determinant([[QQ(x) for x in r] for r in g], QQ) != 0
        # a non-diagonal invertible letter pairing stays nondegenerate in every degree
        M = [[2 if i == j else (1 if j > i else 0) for j in range(n)] for i in range(n)]
        for k in range(n + 1):
            g = gram_matrix(n, k, lambda i, j: M[i][j])
            assert determinant([[QQ(x) for x in r] for r in g], QQ) != 0
    for F in (QQ, F3, F5):
        for n in range(1, 5):
            M = [[F(2 if i == j else (1 if j > i else (i - j) % 3)) for j in range(n)] for i in range(n)]
            E = exterior_algebra(n, F)
            B = wedge_basis(n)
            mat = [[canonical_pairing({a: F.one}, {b: F.one}, lambda i, j: M[i][j]) for b in B] for a in B]
            assert verify_hopf_pairing(E, E, mat).passed, (F.name(), n)
            assert verify_hopf_pairing(dual(E), E, [[F.one if i == j else F.zero for j in range(E.dim)] for i in range(E.dim)]).passed
    assert verify_T_Tc_pairing(2, bound=4).passed


@pytest.mark.criterion(5, "round trips on the corpus are verified isomorphisms")
def test_round_trips():
    for name, d in _finite_pairs():
        assert roundtrip_pair(d)[1].passed, name
        assert alpha_roundtrip(build_H(d).hopf)[1].passed, name
    for name, h in _pairs():
        assert roundtrip_hcp(h)[1].passed, name
        assert beta_roundtrip(build_A(h).hopf).report.passed, name


@pytest.mark.criterion(6, "dim A(C,W) = dim C * 2^dim W with zero restriction residual")
def test_dimension_of_A_and_residuals():
    for name, h in _pairs():
        a = build_A(h)
        assert a.dim == h.C.dim * 2 ** h.dim_W, name
        assert a.residuals and set(a.residuals.values()) == {0}, name


@pytest.mark.criterion(7, "unipotence: irreducibility of A and of its even quotient agree")
def test_unipotence_flags_agree():
    seen = set()
    for name, h in _pairs():
        flags = unipotence_check(build_A(h).hopf)
        assert flags["agree"], name
        seen.add(flags["Abar_irreducible"])
    assert seen == {True, False}


@pytest.mark.criterion(8, "a nonzero coinvariant gives a nonzero odd primitive")
def test_coinvariants_give_odd_primitives():
    hits = 0
    for name, h in _pairs():
        if coinvariants(h):
            hits += 1
            assert odd_primitive_check(h).passed, name
    assert hits >= 5


@pytest.mark.criterion(9, "over F3 and F5 irreducible semisimple duals are purely even; the exterior algebra on one letter is not semisimple")
def test_irreducible_semisimple_is_purely_even():
    checked = 0
    for label, h, _ in _corpus():
        p = h.field.characteristic
        if p not in (3, 5) or h.dim >= p:
            continue
        for x in (h, dual(h)):
            if is_irreducible(x) and is_semisimple_algebra(x):
                checked += 1
                assert x.is_purely_even(), label
    assert checked > 0
    for F in (F3, F5):
        w = exterior_algebra(1, F)
        assert is_irreducible(w)
        assert not is_semisimple_algebra(w)
        assert not w.is_purely_even()


@pytest.mark.criterion(10, "coradical of the Z2 smash coproduct for all corpus coalgebras")
def test_smash_coradical():
    for label, h, _ in _corpus():
        assert check_smash_coradical(h).passed, label


@pytest.mark.criterion(11, "primitives equal g + V in filtration degree 4 for gl(1|1) and osp(1|2)")
@pytest.mark.parametrize("name", ["gl11.json", "osp12.json"])
def test_kostant(name):
    d = from_lie_superalgebra(entry(name).document(QQ).obj)
    assert EnvelopingH(d).kostant_check(4).passed


@pytest.mark.criterion(12, "guard rails: characteristic 2 exits 3; characteristic-3 Lie superalgebras are rejected")
def test_guard_rails():
    runner = CliRunner()
    cases = [
        ("verify-hopf", "z2_group.json"),
        ("build-h", "z2_pair.json"),
        ("verify-dhcp", "gl11.json"),
        ("build-a", "z2_hcp.json"),
        ("classify", ""),
    ]
    for cmd, name in cases:
        res = runner.invoke(main, [cmd, str(corpus_dir() / name), "--field", "Fp:2"])
        assert res.exit_code == 3, cmd
    for name in ("gl11.json", "osp12.json"):
        with pytest.raises(UnsupportedCharacteristic, match=r"\(c\).*\(d\)"):
            from_lie_superalgebra(entry(name).document(F3).obj)
        res = runner.invoke(main, ["verify-dhcp", str(corpus_dir() / name), "--field", "Fp:3"])
        assert res.exit_code == 3
        assert "(c)" in res.stderr and "(d)" in res.stderr
