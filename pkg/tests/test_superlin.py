from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcpair.superlin import (
    FieldError,
    FieldSpec,
    QQ,
    Subspace,
    UnsupportedCharacteristic,
    determinant,
    inverse,
    kernel,
    matmul,
    rank,
)

F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


def _leibniz(m, F):
    n = len(m)
    total = F.zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(-1) if inv % 2 else F.one
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def test_field_names_and_parsing():
    assert FieldSpec.from_string("Q").name() == "Q"
    assert FieldSpec.from_string("F3").name() == "Fp:3"
    assert FieldSpec.from_string("GF(5)") == F5
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert F5.format(F5.parse("3/4")) == "2"
    assert F3.parse("7") == F3.one


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", "", "--1"])
def test_malformed_scalars_rejected(text):
    with pytest.raises(FieldError):
        QQ.parse(text)


def test_characteristic_two_is_unsupported():
    with pytest.raises(UnsupportedCharacteristic):
        FieldSpec.from_string("Fp:2")
    with pytest.raises(FieldError):
        FieldSpec.prime(9)


def test_reduction_needs_invertible_denominator():
    with pytest.raises(FieldError):
        F3.parse("1/3")


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_prime_field_axioms(a, b, c):
    for F in (F3, F5):
        x, y, z = F(a), F(b), F(c)
        assert (x + y) * z == x * z + y * z
        assert x * y == y * x
        if y != 0:
            assert (x / y) * y == x
        assert x - x == F.zero


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=2, max_size=3))
def test_kernel_matches_enumeration_over_f3(rows):
    F = F3
    M = [{j: F(x) for j, x in enumerate(r) if x} for r in rows]
    ker = kernel(M, range(3), F)
    brute = 0
    for v in product(range(3), repeat=3):
        if all(sum(F(r[j]) * v[j] for j in range(3)) == 0 for r in rows):
            brute += 1
    assert 3 ** len(ker) == brute
    assert len(ker) + rank(M) == 3


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_and_inverse(rows):
    m = [[QQ(x) for x in r] for r in rows]
    d = determinant(m, QQ)
    assert d == _leibniz(m, QQ)
    inv = inverse(m, QQ)
    if d == 0:
        assert inv is None
    else:
        prod = matmul(m, inv, QQ)
        assert prod == [[QQ.one if i == j else QQ.zero for j in range(3)] for i in range(3)]


def test_subspace_coordinates():
    s = Subspace([{0: QQ(1), 1: QQ(1)}, {1: QQ(1), 2: QQ(-1)}])
    assert s.dim == 2
    assert s.contains({0: QQ(1), 2: QQ(1)})
    assert not s.contains({2: QQ(1)})
