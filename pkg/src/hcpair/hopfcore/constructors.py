"""Standard finite-dimensional Hopf superalgebras used throughout the corpus."""
from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Sequence

from ..freegraded import wedge_basis, wedge_coproduct, wedge_mul
from ..superlin import FieldSpec
from .algebra import HopfSuperAlgebraData


class InvalidGroupTable(ValueError):
    pass


def cyclic_group(n: int) -> tuple[list[str], dict[tuple[str, str], str]]:
    names = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = {(names[a], names[b]): names[(a + b) % n] for a in range(n) for b in range(n)}
    return names, table


def symmetric_group(n: int) -> tuple[list[str], dict[tuple[str, str], str]]:
    """Permutations in one-line notation, identity first; product is composition ``(st)(i) = s(t(i))``."""
    perms = sorted(permutations(range(1, n + 1)))
    names = ["".join(map(str, p)) for p in perms]
    table = {}
    for s in perms:
        for t in perms:
            st = tuple(s[t[i] - 1] for i in range(n))
            table[("".join(map(str, s)), "".join(map(str, t)))] = "".join(map(str, st))
    return names, table


def permutation_sign(name: str) -> int:
    p = [int(c) for c in name]
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def _check_group(names: Sequence[str], table) -> tuple[str, dict[str, str]]:
    idx = set(names)
    if len(idx) != len(names):
        raise InvalidGroupTable("duplicate element names")
    for a in names:
        for b in names:
            if table.get((a, b)) not in idx:
                raise InvalidGroupTable(f"product {a}*{b} missing or outside the set")
    ident = [e for e in names if all(table[(e, a)] == a and table[(a, e)] == a for a in names)]
    if not ident:
        raise InvalidGroupTable("no identity element")
    e = ident[0]
    inv = {}
    for a in names:
        cands = [b for b in names if table[(a, b)] == e and table[(b, a)] == e]
        if not cands:
            raise InvalidGroupTable(f"{a} has no inverse")
        inv[a] = cands[0]
    for a in names:
        for b in names:
            for c in names:
                if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                    raise InvalidGroupTable(f"not associative at {a},{b},{c}")
    return e, inv


def group_algebra(names: Sequence[str], table, field: FieldSpec) -> HopfSuperAlgebraData:
    """``kG`` with grouplike basis."""
    e, inv = _check_group(names, table)
    pos = {g: i for i, g in enumerate(names)}
    one = field.one
    mult = {(pos[a], pos[b]): {pos[table[(a, b)]]: one} for a in names for b in names}
    return HopfSuperAlgebraData.build(
        field,
        [(g, 0) for g in names],
        mult,
        {pos[e]: one},
        [{(i, i): one} for i in range(len(names))],
        [one] * len(names),
        [{pos[inv[g]]: one} for g in names],
    )


def function_algebra(names: Sequence[str], table, field: FieldSpec) -> HopfSuperAlgebraData:
    """``k^G`` with the idempotent basis ``e_g`` (named ``e_<g>``)."""
    e, inv = _check_group(names, table)
    pos = {g: i for i, g in enumerate(names)}
    one = field.one
    n = len(names)
    comult: list[dict] = [{} for _ in range(n)]
    for a in names:
        for b in names:
            comult[pos[table[(a, b)]]][(pos[a], pos[b])] = one
    return HopfSuperAlgebraData.build(
        field,
        [(f"e_{g}", 0) for g in names],
        {(i, i): {i: one} for i in range(n)},
        {i: one for i in range(n)},
        comult,
        [one if g == e else field.zero for g in names],
        [{pos[inv[g]]: one} for g in names],
    )


def trivial_hopf(field: FieldSpec) -> HopfSuperAlgebraData:
    one = field.one
    return HopfSuperAlgebraData.build(field, [("1", 0)], {(0, 0): {0: one}}, {0: one}, [{(0, 0): one}], [one], [{0: one}])


def wedge_name(word, letters: Sequence[str]) -> str:
    return "1" if not word else "".join(letters[i] for i in word)


def exterior_algebra(letters: Sequence[str] | int, field: FieldSpec) -> HopfSuperAlgebraData:
    """``∧(V)`` on odd primitive generators; basis = increasing words by degree."""
    if isinstance(letters, int):
        letters = [f"x{i + 1}" for i in range(letters)] if letters > 1 else ["x"][:letters]
    n = len(letters)
    basis = wedge_basis(n)
    pos = {w: i for i, w in enumerate(basis)}
    one = field.one
    mult = {}
    for u in basis:
        for v in basis:
            s, w = wedge_mul(u, v)
            if s:
                mult[(pos[u], pos[v])] = {pos[w]: field(s)}
    comult = []
    for u in basis:
        comult.append({(pos[a], pos[b]): field(c) for (a, b), c in wedge_coproduct(u).items()})
    return HopfSuperAlgebraData.build(
        field,
        [(wedge_name(w, letters), len(w) % 2) for w in basis],
        mult,
        {0: one},
        comult,
        [one] + [field.zero] * (len(basis) - 1),
        [{pos[w]: field((-1) ** len(w))} for w in basis],
    )


def z2_smash_exterior(field: FieldSpec) -> HopfSuperAlgebraData:
    """``kZ/2 ⋉ ∧(kx)``: g grouplike, x odd primitive, ``x^2 = 0``, ``xg = -gx``.

    Basis ``1, g, x, gx``.
    """
    one, z = field.one, field.zero
    # index: 0=1, 1=g, 2=x, 3=gx ; elements g^a x^b
    def idx(a, b):
        return {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}[(a, b)]

    ab = [(0, 0), (1, 0), (0, 1), (1, 1)]
    mult = {}
    for i, (a1, b1) in enumerate(ab):
        for j, (a2, b2) in enumerate(ab):
            if b1 and b2:
                continue
            # g^a1 x^b1 g^a2 x^b2 = (-1)^{b1 a2} g^{a1+a2} x^{b1+b2}
            sign = -1 if (b1 and a2) else 1
            mult[(i, j)] = {idx((a1 + a2) % 2, b1 + b2): field(sign)}
    comult = [
        {(0, 0): one},
        {(1, 1): one},
        {(0, 2): one, (2, 0): one},
        # Δ(gx) = (g⊗g)(1⊗x + x⊗1) = g⊗gx + gx⊗g
        {(1, 3): one, (3, 1): one},
    ]
    return HopfSuperAlgebraData.build(
        field,
        [("1", 0), ("g", 0), ("x", 1), ("gx", 1)],
        mult,
        {0: one},
        comult,
        [one, one, z, z],
        None,
    )


def truncated_polynomial(field: FieldSpec, var: str = "t") -> HopfSuperAlgebraData:
    """``k[t]/(t^p)`` with ``t`` primitive, over ``F_p`` (``p = char k``)."""
    p = field.characteristic
    if p == 0:
        raise ValueError("k[t]/(t^p) with t primitive needs positive characteristic")
    names = ["1"] + [var if k == 1 else f"{var}^{k}" for k in range(1, p)]
    one = field.one
    mult = {(i, j): {i + j: one} for i in range(p) for j in range(p) if i + j < p}
    comult = [{(i, k - i): field(comb(k, i)) for i in range(k + 1) if comb(k, i) % p} for k in range(p)]
    return HopfSuperAlgebraData.build(
        field,
        [(n, 0) for n in names],
        mult,
        {0: one},
        comult,
        [one] + [field.zero] * (p - 1),
        [{k: field((-1) ** k)} for k in range(p)],
    )
