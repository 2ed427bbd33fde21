from __future__ import annotations

from itertools import combinations
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from hcpair.freegraded import (
    antipode_T,
    concat,
    gram_matrix,
    koszul_sign,
    shuffle_coproduct,
    shuffle_product,
    verify_T_Tc_pairing,
    verify_free_structures,
    wedge_basis,
    wedge_mul,
    wedge_normalize,
)
from hcpair.superlin import QQ, determinant


def _inversions(seq) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def _brute_coproduct(word):
    """Split positions into a subset and its complement; sign = parity of the unshuffle."""
    out = {}
    n = len(word)
    for k in range(n + 1):
        for S in combinations(range(n), k):
            rest = tuple(i for i in range(n) if i not in S)
            sign = -1 if _inversions(S + rest) % 2 else 1
            key = (tuple(word[i] for i in S), tuple(word[i] for i in rest))
            out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


def test_coproduct_of_short_word_frozen():
    assert shuffle_coproduct((0, 1, 2)) == {
        ((), (0, 1, 2)): 1,
        ((0,), (1, 2)): 1,
        ((1,), (0, 2)): -1,
        ((2,), (0, 1)): 1,
        ((0, 1), (2,)): 1,
        ((0, 2), (1,)): -1,
        ((1, 2), (0,)): 1,
        ((0, 1, 2), ()): 1,
    }


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=5))
def test_shuffle_coproduct_matches_brute_force(word):
    assert shuffle_coproduct(tuple(word)) == _brute_coproduct(tuple(word))


@given(st.integers(0, 4), st.integers(0, 4))
def test_shuffle_product_term_count(m, n):
    u = tuple(range(m))
    v = tuple(range(m, m + n))
    prod = shuffle_product(u, v)
    assert len(prod) == comb(m + n, m)
    for w, c in prod.items():
        assert c == (-1 if _inversions(w) % 2 else 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=6))
def test_wedge_normalize_sign(letters):
    sign, w = wedge_normalize(letters)
    if len(set(letters)) < len(letters):
        assert (sign, w) == (0, None)
    else:
        assert w == tuple(sorted(letters))
        assert sign == (-1 if _inversions(letters) % 2 else 1)


def test_koszul_sign_ignores_even_letters():
    assert koszul_sign([1, 0, 1], [2, 1, 0]) == -1
    assert koszul_sign([0, 0, 1], [2, 1, 0]) == 1
    assert koszul_sign([1, 1, 1], [1, 0, 2]) == -1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=5))
def test_antipode_axiom_on_tensor_algebra(word):
    total = {}
    for (a, b), c in shuffle_coproduct(tuple(word)).items():
        for s, d in antipode_T(a).items():
            for w, e in concat({s: d}, {b: 1}).items():
                total[w] = total.get(w, 0) + c * e
    assert {w: c for w, c in total.items() if c} == {}


def test_wedge_multiplication_is_associative():
    basis = wedge_basis(4)
    for u in basis:
        for v in basis:
            s1, uv = wedge_mul(u, v)
            for w in basis:
                s2, vw = wedge_mul(v, w)
                left = (0, None) if not s1 else wedge_mul(uv, w)
                right = (0, None) if not s2 else wedge_mul(u, vw)
                assert s1 * left[0] == s2 * right[0]


def test_gram_matrices_identity_for_dual_letters():
    for n in range(1, 6):
        for d in range(n + 1):
            g = gram_matrix(n, d)
            assert g == [[1 if i == j else 0 for j in range(len(g))] for i in range(len(g))]


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_gram_matrix_is_compound_matrix(entries):
    # det of the k-th compound of an n x n matrix is det^C(n-1, k-1)
    n = 3
    M = [entries[3 * i: 3 * i + 3] for i in range(n)]
    base = determinant([[QQ(x) for x in r] for r in M], QQ)
    for k in range(1, n + 1):
        g = gram_matrix(n, k, lambda i, j: M[i][j])
        assert determinant([[QQ(x) for x in r] for r in g], QQ) == base ** comb(n - 1, k - 1)


def test_free_structures_verify():
    assert verify_free_structures([0, 1], bound=4).passed
    assert verify_free_structures([0, 1], bound=3, parity=lambda x: x).passed
    assert verify_T_Tc_pairing(2, bound=4).passed
