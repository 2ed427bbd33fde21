"""Tensor algebra, tensor coalgebra and exterior algebra on a super space.

Words are tuples of letters (any hashable, usually ints); graded elements are
dicts ``word -> coefficient``.  Letter parities are supplied by a callable
``parity(letter) -> 0 | 1`` (default: every letter odd).  Signs follow the
Koszul rule: a permutation of letters contributes ``-1`` for every pair of
odd letters whose relative order it reverses, which for all-odd words is
just the sign of the permutation.

>>> shuffle_coproduct((1, 2))
{((), (1, 2)): 1, ((1,), (2,)): 1, ((2,), (1,)): -1, ((1, 2), ()): 1}
>>> shuffle_product((1,), (2,))
{(1, 2): 1, (2, 1): -1}
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Hashable, Mapping, Sequence

from .report import Report
from .superlin import vaxpy

Word = tuple
WedgeWord = tuple
GradedElement = dict
Parity = Callable[[Hashable], int]


def all_odd(_letter) -> int:
    return 1


class MixedParityError(ValueError):
    """Exterior-algebra operation received an even letter."""


@lru_cache(maxsize=None)
def _subsets(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), i))


def koszul_sign(parities: Sequence[int], order: Sequence[int]) -> int:
    """Sign for rearranging letters with the given parities into ``order``.

    ``order[k]`` is the original position of the letter placed k-th.
    """
    sign = 1
    n = len(order)
    for a in range(n):
        pa = parities[order[a]]
        if not pa:
            continue
        for b in range(a + 1, n):
            if parities[order[b]] and order[b] < order[a]:
                sign = -sign
    return sign


# -- T(V): concatenation product, shuffle coproduct -----------------------

def shuffle_coproduct(word: Word, parity: Parity = all_odd) -> dict[tuple[Word, Word], int]:
    """Coproduct making every letter primitive, summed over all i-shuffles."""
    n = len(word)
    pars = [parity(x) for x in word]
    out: dict = {}
    for i in range(n + 1):
        for left in _subsets(n, i):
            lset = set(left)
            right = tuple(k for k in range(n) if k not in lset)
            s = koszul_sign(pars, left + right)
            key = (tuple(word[k] for k in left), tuple(word[k] for k in right))
            vaxpy(out, {key: s})
    return out


def coproduct_T(x: Mapping[Word, object], parity: Parity = all_odd) -> dict:
    out: dict = {}
    for w, c in x.items():
        vaxpy(out, shuffle_coproduct(w, parity), c)
    return out


def concat(x: Mapping[Word, object], y: Mapping[Word, object]) -> dict:
    out: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            vaxpy(out, {u + v: a * b})
    return out


def antipode_T(word: Word, parity: Parity = all_odd) -> dict[Word, int]:
    """``S(v1...vn) = (-1)^n (Koszul sign) vn...v1`` (letters primitive)."""
    n = len(word)
    pars = [parity(x) for x in word]
    order = list(range(n - 1, -1, -1))
    return {tuple(reversed(word)): (-1) ** n * koszul_sign(pars, order)}


# -- T_c(W): shuffle product, deconcatenation coproduct --------------------

def shuffle_product(w1: Word, w2: Word, parity: Parity = all_odd) -> dict[Word, int]:
    """Signed sum over all interleavings of ``w1`` and ``w2``."""
    n1, n = len(w1), len(w1) + len(w2)
    letters = tuple(w1) + tuple(w2)
    pars = [parity(x) for x in letters]
    out: dict = {}
    for pos in _subsets(n, n1):
        pset = set(pos)
        slots = [0] * n
        it1, it2 = iter(range(n1)), iter(range(n1, n))
        for k in range(n):
            slots[k] = next(it1) if k in pset else next(it2)
        s = koszul_sign(pars, slots)
        vaxpy(out, {tuple(letters[k] for k in slots): s})
    return out


def shuffle_mul(x: Mapping[Word, object], y: Mapping[Word, object], parity: Parity = all_odd, bound: int | None = None) -> dict:
    out: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            if bound is not None and len(u) + len(v) > bound:
                continue
            vaxpy(out, shuffle_product(u, v, parity), a * b)
    return out


def deconcatenation(word: Word) -> dict[tuple[Word, Word], int]:
    return {(word[:i], word[i:]): 1 for i in range(len(word) + 1)}


def coproduct_Tc(z: Mapping[Word, object]) -> dict:
    out: dict = {}
    for w, c in z.items():
        vaxpy(out, deconcatenation(w), c)
    return out


def antipode_Tc(word: Word, parity: Parity = all_odd) -> dict[Word, int]:
    """Antipode of the shuffle algebra: signed reversal, same closed form as T(V)."""
    return antipode_T(word, parity)


def counit_word(word: Word) -> int:
    return 1 if len(word) == 0 else 0


def words(letters: Sequence, degree: int) -> list[Word]:
    return [tuple(w) for w in product(letters, repeat=degree)]


def words_upto(letters: Sequence, bound: int) -> list[Word]:
    out: list[Word] = []
    for d in range(bound + 1):
        out.extend(words(letters, d))
    return out


# -- exterior algebra ------------------------------------------------------

def wedge_normalize(letters: Sequence, order: Callable = lambda x: x, parity: Parity = all_odd):
    """Sort odd letters with the sign of the sorting permutation.

    Returns ``(sign, wedge_word)``, or ``(0, None)`` when a letter repeats.

    >>> wedge_normalize([3, 1, 2])
    (1, (1, 2, 3))
    """
    for x in letters:
        if parity(x) != 1:
            raise MixedParityError(f"exterior algebra letters must be odd, got {x!r}")
    keys = [order(x) for x in letters]
    if len(set(keys)) != len(keys):
        return 0, None
    perm = sorted(range(len(letters)), key=lambda k: keys[k])
    sign = koszul_sign([1] * len(letters), perm)
    return sign, tuple(letters[k] for k in perm)


def wedge_basis(n: int) -> list[WedgeWord]:
    """Subsets of ``range(n)`` ordered by degree, then lexicographically."""
    out: list[WedgeWord] = []
    for d in range(n + 1):
        out.extend(_subsets(n, d))
    return out


def wedge_mul(u: WedgeWord, v: WedgeWord):
    return wedge_normalize(tuple(u) + tuple(v))


def wedge_coproduct(u: WedgeWord) -> dict[tuple[WedgeWord, WedgeWord], int]:
    """Coproduct of an increasing odd word; every letter primitive."""
    return shuffle_coproduct(tuple(u))


def _perm_sign(perm: Sequence[int]) -> int:
    return koszul_sign([1] * len(perm), perm)


def canonical_pairing(u: Mapping[WedgeWord, object], z: Mapping[WedgeWord, object], letter_pairing: Callable[[object, object], object]):
    """Determinant pairing ``⟨v1∧...∧vn, w1∧...∧wn⟩ = det(⟨vi, wj⟩)``.

    ``u`` and ``z`` are wedge elements (dicts word -> coefficient); words of
    different degree pair to zero.
    """
    total = 0
    for a, x in u.items():
        for b, y in z.items():
            if len(a) != len(b):
                continue
            n = len(a)
            det = 0
            for perm in permutations(range(n)):
                term = _perm_sign(perm)
                for i in range(n):
                    term = term * letter_pairing(a[i], b[perm[i]])
                    if term == 0:
                        break
                det = det + term
            total = total + x * y * det
    return total


def pairing_T_Tc(x: Mapping[Word, object], z: Mapping[Word, object], letter_pairing: Callable[[object, object], object]):
    """``⟨v1...vn, w1...wn⟩ = Π⟨vi, wi⟩``, zero across degrees."""
    total = 0
    for a, s in x.items():
        for b, t in z.items():
            if len(a) != len(b):
                continue
            term = s * t
            for i in range(len(a)):
                term = term * letter_pairing(a[i], b[i])
                if term == 0:
                    break
            total = total + term
    return total


def gram_matrix(n: int, degree: int, letter_pairing=None) -> list[list]:
    """Degree-``degree`` Gram matrix of the canonical pairing on ``∧(k^n)``."""
    if letter_pairing is None:
        def letter_pairing(i, j):
            return 1 if i == j else 0
    basis = list(_subsets(n, degree))
    return [[canonical_pairing({a: 1}, {b: 1}, letter_pairing) for b in basis] for a in basis]


# -- degreewise verification -----------------------------------------------

def _pair2(t1: Mapping, t2: Mapping, lp) -> object:
    total = 0
    for (a, b), x in t1.items():
        for (c, d), y in t2.items():
            if len(a) == len(c) and len(b) == len(d):
                total = total + x * y * pairing_T_Tc({a: 1}, {c: 1}, lp) * pairing_T_Tc({b: 1}, {d: 1}, lp)
    return total


def verify_free_structures(letters: Sequence, bound: int = 5, parity: Parity = all_odd) -> Report:
    """Coassociativity and super-cocommutativity of the shuffle coproduct,
    associativity and super-commutativity of the shuffle product, up to ``bound``."""
    rep = Report(f"free graded structures (|letters|={len(letters)}, degree<={bound})")
    par = parity

    def tsign(a: Word, b: Word) -> int:
        pa = sum(par(x) for x in a) % 2
        pb = sum(par(x) for x in b) % 2
        return -1 if pa and pb else 1

    checks = {"shuffle-coassociative": None, "shuffle-cocommutative": None, "shuffle-associative": None, "shuffle-commutative": None}
    for d in range(bound + 1):
        for w in words(letters, d):
            dw = shuffle_coproduct(w, par)
            left: dict = {}
            right: dict = {}
            for (a, b), c in dw.items():
                for (p, q), e in shuffle_coproduct(a, par).items():
                    vaxpy(left, {(p, q, b): c * e})
                for (p, q), e in shuffle_coproduct(b, par).items():
                    vaxpy(right, {(a, p, q): c * e})
            if left != right and checks["shuffle-coassociative"] is None:
                checks["shuffle-coassociative"] = {"word": list(map(str, w))}
            swapped = {(b, a): c * tsign(a, b) for (a, b), c in dw.items()}
            if swapped != dw and checks["shuffle-cocommutative"] is None:
                checks["shuffle-cocommutative"] = {"word": list(map(str, w))}
    for d1 in range(bound + 1):
        for d2 in range(bound + 1 - d1):
            for u in words(letters, d1):
                for v in words(letters, d2):
                    uv = shuffle_product(u, v, par)
                    vu = {k: c * tsign(u, v) for k, c in shuffle_product(v, u, par).items()}
                    if uv != vu and checks["shuffle-commutative"] is None:
                        checks["shuffle-commutative"] = {"words": [list(map(str, u)), list(map(str, v))]}
    # associativity on triples of total degree <= bound (cheaper bound for the cube)
    for d1 in range(bound + 1):
        for d2 in range(bound + 1 - d1):
            for d3 in range(bound + 1 - d1 - d2):
                if d1 == 0 or d2 == 0 or d3 == 0:
                    continue
                for u in words(letters, d1):
                    for v in words(letters, d2):
                        uv = shuffle_product(u, v, par)
                        for w in words(letters, d3):
                            lhs = shuffle_mul(uv, {w: 1}, par)
                            rhs = shuffle_mul({u: 1}, shuffle_product(v, w, par), par)
                            if lhs != rhs and checks["shuffle-associative"] is None:
                                checks["shuffle-associative"] = {"words": [list(map(str, x)) for x in (u, v, w)]}
    for name, wit in checks.items():
        rep.add(name, wit is None, wit)
    return rep


def verify_T_Tc_pairing(n: int, bound: int = 4) -> Report:
    """Hopf pairing laws between ``T(V)`` and ``T_c(V*)`` on all basis words.

    Letters ``0..n-1`` of ``V`` pair with letters ``0..n-1`` of ``W = V*`` as
    dual bases.  Checked: products against coproducts on both sides, units
    against counits, and the antipode relation.
    """
    letters = list(range(n))

    def lp(i, j):
        return 1 if i == j else 0

    rep = Report(f"T(V) x T_c(W) Hopf pairing (dim {n}, degree<={bound})")
    bad = {"product-vs-coproduct": None, "coproduct-vs-product": None, "unit-counit": None, "antipode": None}
    all_words = words_upto(letters, bound)
    for x in all_words:
        for y in all_words:
            if len(x) + len(y) > bound:
                continue
            for a in words(letters, len(x) + len(y)):
                lhs = pairing_T_Tc({x + y: 1}, {a: 1}, lp)
                rhs = _pair2({(x, y): 1}, deconcatenation(a), lp)
                if lhs != rhs and bad["product-vs-coproduct"] is None:
                    bad["product-vs-coproduct"] = {"x": list(x), "y": list(y), "a": list(a), "lhs": lhs, "rhs": rhs}
    for x in all_words:
        dx = shuffle_coproduct(x)
        for k in range(len(x) + 1):
            for a in words(letters, k):
                for b in words(letters, len(x) - k):
                    lhs = pairing_T_Tc({x: 1}, shuffle_product(a, b), lp)
                    rhs = _pair2(dx, {(a, b): 1}, lp)
                    if lhs != rhs and bad["coproduct-vs-product"] is None:
                        bad["coproduct-vs-product"] = {"x": list(x), "a": list(a), "b": list(b), "lhs": lhs, "rhs": rhs}
    for a in all_words:
        if pairing_T_Tc({(): 1}, {a: 1}, lp) != counit_word(a) and bad["unit-counit"] is None:
            bad["unit-counit"] = {"a": list(a)}
        if pairing_T_Tc({a: 1}, {(): 1}, lp) != counit_word(a) and bad["unit-counit"] is None:
            bad["unit-counit"] = {"x": list(a)}
    for x in all_words:
        for a in words(letters, len(x)):
            if pairing_T_Tc(antipode_T(x), {a: 1}, lp) != pairing_T_Tc({x: 1}, antipode_Tc(a), lp):
                if bad["antipode"] is None:
                    bad["antipode"] = {"x": list(x), "a": list(a)}
    for name, wit in bad.items():
        rep.add(name, wit is None, wit)
    return rep
