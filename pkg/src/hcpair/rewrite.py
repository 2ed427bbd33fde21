"""Rewriting in J-rings: words mixing J-letters with odd generators.

A J-ring presentation has a cocommutative Hopf algebra J, an ordered set X
of odd letters, a right action ``x◁a`` and a symmetric bracket ``[x, y]``
with values in the primitives of J.  Words are tuples of integer tokens:
``i >= 0`` is the X-letter ``i`` and ``~j`` (that is ``-j-1``) is the J-letter
``j``.  The reduction rules are

* J-merge: two adjacent J-letters multiply in J (for ``J = U(g)`` only a
  descending pair ``h_i h_j``, ``i > j``, is rewritten, by the commutator);
* ``x a -> Σ a1 (x◁a2)``, where ``a`` is the whole run of J-letters
  following ``x``;
* ``x y -> -y x + [x, y]`` when ``x > y``;
* ``x x -> 1/2 [x, x]``.

Irreducible words are a J-word followed by a strictly increasing X-word.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dfield
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .hopfcore.algebra import HopfSuperAlgebraData, format_vector, verify_super_cocommutative
from .lie import LieSuperalgebra
from .report import Report
from .superlin import FieldSpec, vaxpy

Word = tuple[int, ...]


class PresentationError(ValueError):
    """The data do not define a J-ring presentation."""


class OrderViolation(AssertionError):
    """A rule application failed to decrease the word order (strict mode)."""


class NonTermination(RuntimeError):
    pass


def jtok(j: int) -> int:
    return ~j


def is_j(t: int) -> bool:
    return t < 0


# -- the coefficient algebra J ---------------------------------------------

class FiniteJ:
    """A finite-dimensional, purely even, cocommutative Hopf algebra used as J.

    J-elements are sparse vectors over the basis of ``hopf``.
    """

    kind = "finite"

    def __init__(self, hopf: HopfSuperAlgebraData) -> None:
        if not hopf.is_purely_even():
            raise PresentationError("J must be purely even")
        rep = verify_super_cocommutative(hopf)
        if not rep.passed:
            raise PresentationError(f"J is not cocommutative: {rep.failures()[0].witness}")
        self.hopf = hopf
        self.field = hopf.field
        self.names = hopf.names
        self.dim = hopf.dim

    # letters and words
    def letters(self) -> range:
        return range(self.dim)

    def merge(self, a: int, b: int) -> dict[Word, object] | None:
        return {(k,): c for k, c in self.hopf.mult.get((a, b), {}).items()}

    def letter_coproduct(self, a: int) -> list[tuple[Word, Word, object]]:
        return [((i,), (j,), c) for (i, j), c in sorted(self.hopf.comult[a].items())]

    def element_words(self, u: Mapping) -> dict[Word, object]:
        return {(i,): c for i, c in u.items()}

    def word_element(self, w: Word) -> dict[int, object]:
        out = dict(self.hopf.unit)
        for a in w:
            out = self.hopf.mul(out, self.hopf.e(a))
        return out

    # Hopf structure on elements
    @property
    def unit(self) -> dict:
        return dict(self.hopf.unit)

    def basis(self) -> list[dict]:
        return [self.hopf.e(i) for i in range(self.dim)]

    def letter(self, a: int) -> dict:
        return self.hopf.e(a)

    def mul(self, u: Mapping, v: Mapping) -> dict:
        return self.hopf.mul(u, v)

    def coproduct(self, u: Mapping) -> dict:
        return self.hopf.delta(u)

    def counit(self, u: Mapping):
        return self.hopf.eps(u)

    def antipode(self, u: Mapping) -> dict:
        return self.hopf.antipode_of(u)

    def is_primitive(self, u: Mapping) -> bool:
        from .hopfcore.structure import is_primitive

        return is_primitive(self.hopf, u)

    def fmt(self, u: Mapping) -> str:
        return format_vector(u, self.names, self.field)

    def key_name(self, key) -> str:
        return self.names[key]


class EnvelopingJ:
    """``J = U(g)`` for an ordinary Lie algebra with an ordered basis.

    J-elements are sparse vectors over PBW monomials, written as
    non-decreasing tuples of basis indices.
    """

    kind = "enveloping"

    def __init__(self, lie: LieSuperalgebra) -> None:
        if any(lie.parities):
            raise PresentationError("the Lie algebra of an enveloping J must be purely even")
        rep = lie.verify()
        if not rep.passed:
            raise PresentationError(f"Lie algebra axioms fail: {rep.failures()[0].witness}")
        self.lie = lie
        self.field = lie.field
        self.names = lie.names
        self.dim = lie.dim
        self._memo: dict[Word, dict] = {}

    def letters(self) -> range:
        return range(self.dim)

    def merge(self, a: int, b: int) -> dict[Word, object] | None:
        if a <= b:
            return None
        out: dict = {(b, a): self.field.one}
        for k, c in self.lie.bracket.get((a, b), {}).items():
            vaxpy(out, {(k,): c})
        return out

    def letter_coproduct(self, a: int) -> list[tuple[Word, Word, object]]:
        one = self.field.one
        return [((a,), (), one), ((), (a,), one)]

    def element_words(self, u: Mapping) -> dict[Word, object]:
        return dict(u)

    def word_element(self, w: Word) -> dict[Word, object]:
        """PBW expansion of an arbitrary word (memoised straightening)."""
        w = tuple(w)
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                out: dict = {}
                for m, c in self.merge(w[i], w[i + 1]).items():
                    vaxpy(out, self.word_element(w[:i] + m + w[i + 2:]), c)
                break
        else:
            out = {w: self.field.one}
        self._memo[w] = out
        return out

    @property
    def unit(self) -> dict:
        return {(): self.field.one}

    def letter(self, a: int) -> dict:
        return {(a,): self.field.one}

    def lie_element(self, v: Mapping[int, object]) -> dict:
        return {(k,): c for k, c in v.items()}

    def mul(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                vaxpy(out, self.word_element(a + b), x * y)
        return out

    def coproduct(self, u: Mapping) -> dict:
        # on a PBW monomial: sum over sub-multisets by position; subwords stay sorted
        out: dict = {}
        one = self.field.one
        for w, c in u.items():
            n = len(w)
            for r in range(n + 1):
                for pick in combinations(range(n), r):
                    left = tuple(w[i] for i in pick)
                    right = tuple(w[i] for i in range(n) if i not in pick)
                    vaxpy(out, {(left, right): one}, c)
        return out

    def counit(self, u: Mapping):
        return u.get((), self.field.zero)

    def antipode(self, u: Mapping) -> dict:
        out: dict = {}
        for w, c in u.items():
            vaxpy(out, self.word_element(tuple(reversed(w))), c * (-1) ** len(w))
        return out

    def is_primitive(self, u: Mapping) -> bool:
        d = self.coproduct(u)
        for w, c in u.items():
            vaxpy(d, {(w, ()): c}, -1)
            vaxpy(d, {((), w): c}, -1)
        return not d

    def fmt(self, u: Mapping) -> str:
        if not u:
            return "0"
        keys = sorted(u, key=lambda w: (len(w), w))
        return format_vector({i: u[w] for i, w in enumerate(keys)}, [self.key_name(w) for w in keys], self.field)

    def key_name(self, w: Word) -> str:
        if not w:
            return "1"
        parts, i = [], 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            parts.append(self.names[w[i]] + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "·".join(parts)


# -- presentations and words -------------------------------------------------

@dataclass(eq=False)
class JRingPresentation:
    """J, the odd letters X (in their order), the action and the bracket.

    ``action[(x, a)]`` is ``x◁a`` as a vector over X for a J-letter ``a``
    (a basis element of finite J, or a Lie basis element of ``U(g)``);
    missing entries mean the trivial action ``ε(a) x``.  ``bracket[(x, y)]``
    is a J-element; missing entries mean 0.
    """

    J: FiniteJ | EnvelopingJ
    X: tuple[str, ...]
    action: dict[tuple[int, int], dict[int, object]] = dfield(default_factory=dict)
    bracket: dict[tuple[int, int], dict] = dfield(default_factory=dict)

    def __post_init__(self) -> None:
        self.X = tuple(self.X)
        if len(set(self.X)) != len(self.X):
            raise PresentationError("duplicate names in X")
        clash = set(self.X) & set(self.J.names)
        if clash:
            raise PresentationError(f"names used both in X and in J: {sorted(clash)}")
        n = len(self.X)
        for (x, a), v in self.action.items():
            if not (0 <= x < n and a in self.J.letters() and all(0 <= y < n for y in v)):
                raise PresentationError(f"action entry out of range: {(x, a)}")
        for (x, y), v in self.bracket.items():
            if not (0 <= x < n and 0 <= y < n):
                raise PresentationError(f"bracket entry out of range: {(x, y)}")
            if v and not self.J.is_primitive(v):
                raise PresentationError(
                    f"bracket [{self.X[x]},{self.X[y]}] = {self.J.fmt(v)} is not primitive in J"
                )
        half = self.field(2)
        self._half = self.field.one / half

    @property
    def field(self) -> FieldSpec:
        return self.J.field

    @property
    def n(self) -> int:
        return len(self.X)

    # action / bracket lookups
    def act_letter(self, x: int, a: int) -> dict[int, object]:
        v = self.action.get((x, a))
        if v is not None:
            return v
        if self.J.kind == "finite":
            e = self.J.hopf.counit[a]
            return {x: e} if e != 0 else {}
        return {}

    def act(self, x: Mapping[int, object], jword: Word) -> dict[int, object]:
        """Right action of a J-word on a vector over X."""
        cur = dict(x)
        for a in jword:
            nxt: dict = {}
            for y, c in cur.items():
                vaxpy(nxt, self.act_letter(y, a), c)
            cur = nxt
        return cur

    def act_element(self, x: Mapping[int, object], a: Mapping) -> dict[int, object]:
        out: dict = {}
        for w, c in self.J.element_words(a).items():
            vaxpy(out, self.act(x, w), c)
        return out

    def br(self, x: int, y: int) -> dict:
        return self.bracket.get((x, y), {})

    def br_vec(self, u: Mapping[int, object], v: Mapping[int, object]) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                vaxpy(out, self.br(i, j), a * b)
        return out

    # words
    def token(self, name: str) -> int:
        if name in self.X:
            return self.X.index(name)
        if name in self.J.names:
            return jtok(self.J.names.index(name))
        raise KeyError(f"unknown letter {name!r}")

    def word(self, *names: str) -> dict[Word, object]:
        """Element given by a single word, e.g. ``P.word("y", "x")``."""
        return {tuple(self.token(s) for s in names): self.field.one}

    def jelement_word(self, a: Mapping) -> dict[Word, object]:
        return {tuple(jtok(t) for t in w): c for w, c in self.J.element_words(a).items()}

    def fmt_word(self, w: Word) -> str:
        if not w:
            return "1"
        return "·".join(self.J.names[~t] if is_j(t) else self.X[t] for t in w)

    def fmt(self, e: Mapping[Word, object]) -> str:
        if not e:
            return "0"
        keys = sorted(e, key=order_key)
        return format_vector({i: e[w] for i, w in enumerate(keys)}, [self.fmt_word(w) for w in keys], self.field)


@dataclass(frozen=True)
class MixedWord:
    """A word in J-letters and X-letters; ``*`` stands for an unspecified J-letter."""

    tokens: Word

    @classmethod
    def parse(cls, text: str | Sequence[str], X: Sequence[str]) -> MixedWord:
        parts = list(text) if isinstance(text, str) else list(text)
        return cls(tuple(jtok(0) if p == "*" else list(X).index(p) for p in parts))

    def collapsed(self) -> tuple[int | None, ...]:
        return collapse(self.tokens)


def collapse(word: Sequence[int]) -> tuple[int | None, ...]:
    """Merge every run of J-letters into a single ``None``."""
    out: list = []
    for t in word:
        if is_j(t):
            if not out or out[-1] is not None:
                out.append(None)
        else:
            out.append(t)
    return tuple(out)


def _misordered(xs: Sequence[int]) -> int:
    return sum(1 for i in range(len(xs)) for j in range(i + 1, len(xs)) if xs[i] > xs[j])


def order_key(word: Sequence[int]) -> tuple:
    """Total refinement of the word order, used to pick the largest term."""
    c = collapse(word)
    xs = [t for t in c if t is not None]
    return (len(c), tuple(0 if t is None else 1 for t in c), _misordered(xs), len(word), tuple(word))


def word_order_leq(a: MixedWord | Sequence[int], b: MixedWord | Sequence[int]) -> str:
    """Compare two words: ``"less"``, ``"equal"``, ``"greater"`` or ``"incomparable"``.

    J-runs count as one letter.  Lengths are compared first, then the 0/1
    patterns (J = 0 < X = 1) lexicographically, then the number of
    misordered pairs of the X-subwords, which must be rearrangements of one
    another to be comparable.  ``"equal"`` means equivalent in this preorder.

    >>> word_order_leq(MixedWord((~0, 0)), MixedWord((0, ~0)))
    'less'
    """
    A = collapse(a.tokens if isinstance(a, MixedWord) else a)
    B = collapse(b.tokens if isinstance(b, MixedWord) else b)
    if len(A) != len(B):
        return "less" if len(A) < len(B) else "greater"
    sa = tuple(0 if t is None else 1 for t in A)
    sb = tuple(0 if t is None else 1 for t in B)
    if sa != sb:
        return "less" if sa < sb else "greater"
    xa = [t for t in A if t is not None]
    xb = [t for t in B if t is not None]
    if sorted(xa) != sorted(xb):
        return "incomparable"
    ia, ib = _misordered(xa), _misordered(xb)
    if ia == ib:
        return "equal"
    return "less" if ia < ib else "greater"


# -- single rewriting steps ---------------------------------------------------

def find_redex(P: JRingPresentation, w: Word, smash: bool = False) -> tuple[int, str] | None:
    """Leftmost reducible position and the rule name, or ``None``."""
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if is_j(a):
            if is_j(b) and (P.J.kind == "finite" or ~a > ~b):
                return i, "merge"
        elif is_j(b):
            return i, "action"
        elif not smash and a >= b:
            return i, "swap" if a > b else "square"
    return None


def apply_rule(P: JRingPresentation, w: Word, i: int, rule: str) -> dict[Word, object]:
    """Rewrite ``w[i] w[i+1]``; returns the replacement element."""
    pre, post = w[:i], w[i + 2:]
    a, b = w[i], w[i + 1]
    out: dict = {}
    if rule == "merge":
        for m, c in P.J.merge(~a, ~b).items():
            vaxpy(out, {pre + tuple(jtok(t) for t in m) + post: c})
    elif rule == "action":
        # the whole J-run after x acts at once, so the run counts as one letter
        k = i + 1
        while k < len(w) and is_j(w[k]):
            k += 1
        post = w[k:]
        for w1, w2, c in run_coproduct(P.J, [~t for t in w[i + 1:k]]):
            for y, d in P.act({a: P.field.one}, w2).items():
                vaxpy(out, {pre + tuple(jtok(t) for t in w1) + (y,) + post: c * d})
    elif rule == "swap":
        vaxpy(out, {pre + (b, a) + post: -P.field.one})
        for m, c in P.jelement_word(P.br(a, b)).items():
            vaxpy(out, {pre + m + post: c})
    elif rule == "square":
        for m, c in P.jelement_word(P.br(a, a)).items():
            vaxpy(out, {pre + m + post: c * P._half})
    else:
        raise ValueError(rule)
    return out


def run_coproduct(J: FiniteJ | EnvelopingJ, run: Sequence[int]) -> list[tuple[Word, Word, object]]:
    """Coproduct of a product of J-letters, as pairs of J-words (J is even)."""
    acc: dict = {((), ()): J.field.one}
    for a in run:
        nxt: dict = {}
        for (u, v), c in acc.items():
            for w1, w2, d in J.letter_coproduct(a):
                vaxpy(nxt, {(u + w1, v + w2): c * d})
        acc = nxt
    return [(u, v, c) for (u, v), c in sorted(acc.items())]


class _Desc:
    """Heap wrapper giving max-first order on keys."""

    __slots__ = ("key", "word")

    def __init__(self, word: Word) -> None:
        self.key = order_key(word)
        self.word = word

    def __lt__(self, other: _Desc) -> bool:
        return self.key > other.key


def _check_decrease(P: JRingPresentation, w: Word, rule: str, result: Mapping[Word, object]) -> None:
    if rule == "merge":
        return
    for v in result:
        if word_order_leq(v, w) != "less":
            raise OrderViolation(f"rule {rule} on {P.fmt_word(w)} produced {P.fmt_word(v)}, not smaller")


def reduce_words(
    P: JRingPresentation,
    e: Mapping[Word, object],
    smash: bool = False,
    strict: bool = False,
    max_steps: int = 2_000_000,
) -> dict[Word, object]:
    """Fully reduce ``e``; returns a combination of irreducible words.

    With ``smash`` only J-merges and the action rule are used, which gives
    the normal form in the smash product (J-word followed by any X-word).
    """
    terms: dict = {}
    heap: list = []
    for w, c in e.items():
        if c != 0:
            terms[w] = terms.get(w, 0) + c
    for w in list(terms):
        if terms[w] == 0:
            del terms[w]
        else:
            heapq.heappush(heap, _Desc(w))
    done: dict = {}
    steps = 0
    while heap:
        w = heapq.heappop(heap).word
        c = terms.pop(w, None)
        if c is None:
            continue
        red = find_redex(P, w, smash)
        if red is None:
            vaxpy(done, {w: c})
            continue
        steps += 1
        if steps > max_steps:
            raise NonTermination(f"more than {max_steps} rewriting steps")
        i, rule = red
        res = apply_rule(P, w, i, rule)
        if strict:
            _check_decrease(P, w, rule, res)
        for v, d in res.items():
            old = terms.get(v)
            new = (old if old is not None else 0) + c * d
            if new == 0:
                terms.pop(v, None)
            else:
                terms[v] = new
                if old is None:
                    heapq.heappush(heap, _Desc(v))
    return done


def reduce_once(P: JRingPresentation, e: Mapping[Word, object], strict: bool = False) -> tuple[dict[Word, object], bool]:
    """Apply the leftmost rule to the largest reducible term."""
    cands = [w for w, c in e.items() if c != 0 and find_redex(P, w) is not None]
    if not cands:
        return dict(e), False
    w = max(cands, key=order_key)
    i, rule = find_redex(P, w)
    res = apply_rule(P, w, i, rule)
    if strict:
        _check_decrease(P, w, rule, res)
    out = dict(e)
    c = out.pop(w)
    for v, d in res.items():
        vaxpy(out, {v: c * d})
    return out, True


# -- normal forms ---------------------------------------------------------------

@dataclass(eq=False)
class NormalElement:
    """``Σ a_S x_S``: J-coefficients on strictly increasing X-words."""

    presentation: JRingPresentation
    terms: dict[Word, dict] = dfield(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def wedge_words(self) -> set[Word]:
        return set(self.terms)

    def to_words(self) -> dict[Word, object]:
        P = self.presentation
        out: dict = {}
        for s, a in self.terms.items():
            for m, c in P.jelement_word(a).items():
                vaxpy(out, {m + s: c})
        return out

    def __sub__(self, other: NormalElement) -> NormalElement:
        terms = {k: dict(v) for k, v in self.terms.items()}
        for s, a in other.terms.items():
            v = vaxpy(terms.setdefault(s, {}), a, -1)
            if not v:
                del terms[s]
        return NormalElement(self.presentation, terms)

    def left_mul(self, a: Mapping) -> NormalElement:
        J = self.presentation.J
        terms = {}
        for s, b in self.terms.items():
            v = J.mul(a, b)
            if v:
                terms[s] = v
        return NormalElement(self.presentation, terms)

    def fmt(self) -> str:
        P = self.presentation
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms, key=lambda s: (len(s), s)):
            a = P.J.fmt(self.terms[s])
            word = "·".join(P.X[i] for i in s)
            if not word:
                parts.append(a)
            elif a == "1":
                parts.append(word)
            elif a == "-1":
                parts.append("-" + word)
            else:
                parts.append(f"({a})·{word}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_dict(self) -> dict:
        P = self.presentation
        return {
            "·".join(P.X[i] for i in s) or "1": P.J.fmt(a)
            for s, a in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        }


def _split(w: Word) -> tuple[Word, Word]:
    k = 0
    while k < len(w) and is_j(w[k]):
        k += 1
    return tuple(~t for t in w[:k]), w[k:]


def to_normal_element(P: JRingPresentation, words: Mapping[Word, object]) -> NormalElement:
    terms: dict = {}
    for w, c in words.items():
        jw, xs = _split(w)
        if any(is_j(t) for t in xs) or any(xs[i] >= xs[i + 1] for i in range(len(xs) - 1)):
            raise ValueError(f"word {P.fmt_word(w)} is not irreducible")
        vaxpy(terms.setdefault(xs, {}), P.J.word_element(jw), c)
        if not terms[xs]:
            del terms[xs]
    return NormalElement(P, terms)


def normalize(e: Mapping[Word, object] | NormalElement, P: JRingPresentation, strict: bool = False) -> NormalElement:
    """Normal form of a combination of words.

    >>> from hcpair.superlin import QQ
    >>> from hcpair.hopfcore import cyclic_group, group_algebra
    >>> P = JRingPresentation(FiniteJ(group_algebra(*cyclic_group(2), QQ)), ("x",), {(0, 1): {0: -1}})
    >>> normalize(P.word("x", "g"), P).fmt()
    '(-g)·x'
    """
    if isinstance(e, NormalElement):
        e = e.to_words()
    return to_normal_element(P, reduce_words(P, e, strict=strict))


def smash_normalize(e: Mapping[Word, object], P: JRingPresentation, strict: bool = False) -> dict[tuple[Word, Word], object]:
    """Normal form in the smash product: keys are ``(J-word, X-word)``.

    For finite J the J-word has length at most one (the unit is written as
    the empty word only when the input had no J-letter).
    """
    out: dict = {}
    for w, c in reduce_words(P, e, smash=True, strict=strict).items():
        vaxpy(out, {_split(w): c})
    return out


# -- ambiguities ------------------------------------------------------------------

def _overlaps(P: JRingPresentation) -> list[tuple[str, Word]]:
    n = P.n
    out: list = []
    J = P.J
    for x in range(n):
        for y in range(x + 1):
            for a in J.letters():
                out.append(("xya", (x, y, jtok(a))))
    for x in range(n):
        for y in range(x + 1):
            for z in range(y + 1):
                out.append(("xyz", (x, y, z)))
    for x in range(n):
        for a in J.letters():
            for b in J.letters():
                if J.merge(a, b) is not None:
                    out.append(("xab", (x, jtok(a), jtok(b))))
    return out


def check_overlaps(P: JRingPresentation, strict: bool = False) -> Report:
    """Reduce every overlap word both ways and compare normal forms.

    Overlaps are ``x y a`` (``x >= y``), ``x y z`` (``x >= y >= z``) and the
    module overlaps ``x a b`` where ``a b`` is itself reducible.  A further
    check records whether the swap rule is consistent with the relation
    read the other way round, i.e. ``[x, y] = [y, x]``.
    """
    rep = Report(f"overlap ambiguities ({P.n} odd letters)")
    for x in range(P.n):
        for y in range(x):
            diff = {}
            vaxpy(diff, P.br(x, y))
            vaxpy(diff, P.br(y, x), -1)
            name = f"xy-symmetry:{P.X[x]},{P.X[y]}"
            rep.add(name, not diff, None if not diff else {"word": P.fmt_word((x, y)), "difference": P.J.fmt(diff)})
    for kind, w in _overlaps(P):
        left = normalize(apply_rule(P, w, 0, find_redex(P, w[:2])[1]), P, strict)
        right = normalize(apply_rule(P, w, 1, find_redex(P, w[1:])[1]), P, strict)
        diff = left - right
        name = f"{kind}:{','.join(P.fmt_word((t,)) for t in w)}"
        wit = None
        if not diff.is_zero():
            wit = {"word": P.fmt_word(w), "lhs": left.fmt(), "rhs": right.fmt(), "difference": diff.fmt()}
        rep.add(name, wit is None, wit)
    return rep


def reachable_wedge_words(P: JRingPresentation, degree: int | None = None) -> set[Word]:
    """Wedge words occurring in normal forms of all words in X up to ``degree``."""
    from .freegraded import words_upto

    bound = P.n if degree is None else degree
    seen: set = set()
    for w in words_upto(range(P.n), bound):
        seen |= normalize({tuple(w): P.field.one}, P).wedge_words()
    return seen


def presentation_from_names(
    J: FiniteJ | EnvelopingJ,
    X: Sequence[str],
    action: Mapping[tuple[str, str], Mapping[str, object]],
    bracket: Mapping[tuple[str, str], Mapping[str, object]],
) -> JRingPresentation:
    """Build from name-keyed tables; scalars may be strings such as ``"-1/2"``.

    Bracket values are J-elements by name; for ``J = U(g)`` they are Lie
    elements.  Missing ``[y, x]`` entries are copied from ``[x, y]``.
    """
    F = J.field
    X = tuple(X)
    xi = {n: i for i, n in enumerate(X)}
    ji = {n: i for i, n in enumerate(J.names)}

    def scalar(v):
        return F.parse(v) if isinstance(v, str) else F(v)

    act = {}
    for (x, a), v in action.items():
        act[(xi[x], ji[a])] = {xi[y]: scalar(c) for y, c in v.items() if scalar(c) != 0}
    br = {}
    for (x, y), v in bracket.items():
        vec = {ji[k]: scalar(c) for k, c in v.items() if scalar(c) != 0}
        if J.kind == "enveloping":
            vec = J.lie_element(vec)
        if vec:
            br[(xi[x], xi[y])] = vec
    for (x, y), v in list(br.items()):
        br.setdefault((y, x), dict(v))
    return JRingPresentation(J, X, act, br)


def words_of(P: JRingPresentation, items: Iterable[Sequence[str]]) -> dict[Word, object]:
    out: dict = {}
    for names in items:
        vaxpy(out, P.word(*names))
    return out
