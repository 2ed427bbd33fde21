from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcpair.corpus import entry
from hcpair.freegraded import wedge_normalize
from hcpair.rewrite import (
    MixedWord,
    NonTermination,
    check_overlaps,
    find_redex,
    normalize,
    reduce_words,
    smash_normalize,
    word_order_leq,
)
from hcpair.superlin import FieldSpec, QQ

F3 = FieldSpec.prime(3)


def _pair(name, F=QQ):
    return entry(name).document(F).obj.presentation


def _nf(P, *letters):
    return normalize(P.word(*letters), P)


def _group_oracle(P, letters):
    """``kG ⋉ ∧(V)`` by hand: push group elements left through ``x g = g (x◁g)``, then sort."""
    J, F = P.J.hopf, P.field
    state = {(next(iter(J.unit)), ()): F.one}  # (group element, X-letters) -> coefficient
    for name in letters:
        new = {}
        for (g, xs), c in state.items():
            if name in P.X:
                new[(g, xs + (P.X.index(name),))] = new.get((g, xs + (P.X.index(name),)), F.zero) + c
                continue
            h = J.names.index(name)
            (gh, _), = J.mult[(g, h)].items()
            expanded = [((), c)]
            for x in xs:
                expanded = [(w + (y,), d * e) for w, d in expanded for y, e in P.act_letter(x, h).items()]
            for w, d in expanded:
                new[(gh, w)] = new.get((gh, w), F.zero) + d
        state = {k: v for k, v in new.items() if v != 0}
    out = {}
    for (g, xs), c in state.items():
        sign, w = wedge_normalize(list(xs))
        if sign:
            out[(g, w)] = out.get((g, w), F.zero) + c * sign
    return {k: v for k, v in out.items() if v != 0}


def _as_group_terms(nf):
    out = {}
    for s, a in nf.terms.items():
        for g, c in a.items():
            out[(g, s)] = c
    return out


def test_sign_action_moves_group_left():
    P = _pair("z2_pair.json")
    assert _nf(P, "x", "g").fmt() == "(-g)·x"
    assert _nf(P, "x", "g", "x").is_zero()


def test_square_rule_uses_half_bracket():
    P = _pair("charp_pair_f3.json", F3)
    assert _nf(P, "x", "x").fmt() == "2*t*"


def test_enveloping_action_rule():
    P = _pair("broken_c.json")
    assert _nf(P, "v", "h").fmt() == "(1 + h)·v"
    assert _nf(P, "v", "v").fmt() == "1/2*h"


def test_swap_rule_with_bracket():
    P = _pair("heisenberg_odd.json")
    assert _nf(P, "y", "x").fmt() == "h - x·y"


def test_word_order_examples():
    X = ("x", "y")
    assert word_order_leq(MixedWord.parse("*x", X), MixedWord.parse("x*", X)) == "less"
    assert word_order_leq(MixedWord.parse("xy", X), MixedWord.parse("yx", X)) == "less"
    assert word_order_leq(MixedWord.parse("xx", X), MixedWord.parse("xy", X)) == "incomparable"
    assert word_order_leq(MixedWord.parse("x**", X), MixedWord.parse("x*", X)) == "equal"


def test_smash_normal_form_keeps_x_order():
    P = _pair("z2_two_letters.json")
    out = smash_normalize(P.word("y", "g", "x"), P)
    assert set(out) == {((1,), (1, 0))}


def test_step_budget():
    P = _pair("s3_sign_pair.json")
    with pytest.raises(NonTermination):
        reduce_words(P, P.word("x", "123", "x", "213", "x"), max_steps=1)


def test_overlaps_resolve_for_valid_pairs_only():
    for name in ("z2_pair.json", "s3_sign_pair.json", "z3_rotation_pair.json", "heisenberg_odd.json"):
        assert check_overlaps(_pair(name), strict=True).passed, name
    assert check_overlaps(_pair("charp_pair_f3.json", F3)).passed
    assert not check_overlaps(_pair("broken_c.json")).passed
    assert not check_overlaps(_pair("charp_broken_f3.json", F3)).passed


_ROT = _pair("z3_rotation_pair.json")
_S3 = _pair("s3_sign_pair.json")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "1", "g", "g2"]), max_size=7))
def test_group_pair_normal_form_matches_oracle(letters):
    assert _as_group_terms(normalize(_ROT.word(*letters), _ROT, strict=True)) == _group_oracle(_ROT, letters)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["x", "123", "213", "231", "312"]), max_size=6))
def test_s3_normal_form_matches_oracle(letters):
    assert _as_group_terms(normalize(_S3.word(*letters), _S3)) == _group_oracle(_S3, letters)


_CHARP = _pair("charp_pair_f3.json", F3)
_HEIS = _pair("heisenberg_odd.json")


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.sampled_from(["x", "t*", "t^2*"]), max_size=4),
    st.lists(st.sampled_from(["x", "t*", "1*"]), max_size=4),
)
def test_normal_form_respects_multiplication(u, v):
    P = _CHARP
    left = normalize(P.word(*u), P).to_words()
    prod = {}
    for w, c in left.items():
        for z, d in P.word(*v).items():
            prod[w + z] = prod.get(w + z, P.field.zero) + c * d
    assert normalize(prod, P) == normalize(P.word(*(u + v)), P)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "h"]), max_size=6))
def test_enveloping_normal_forms_are_irreducible(letters):
    nf = normalize(_HEIS.word(*letters), _HEIS, strict=True)
    for w in nf.to_words():
        assert find_redex(_HEIS, w) is None
