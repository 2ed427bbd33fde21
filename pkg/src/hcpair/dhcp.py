"""Dual Harish-Chandra pairs ``(J, V)`` and the Hopf superalgebras ``H(J, V)``.

A pair is carried by a :class:`~hcpair.rewrite.JRingPresentation`: J is a
cocommutative Hopf algebra, V has the ordered basis X, J acts on V from the
right and ``[ , ]`` maps ``V×V`` into the primitives of J.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .freegraded import wedge_basis, wedge_coproduct
from .hopfcore.algebra import (
    HopfSuperAlgebraData,
    MorphismData,
    NotCocommutativeError,
    format_vector,
    verify_super_cocommutative,
)
from .hopfcore.constructors import wedge_name
from .hopfcore.structure import adjoint_action, odd_primitives, underline
from .lie import LieSuperalgebra
from .report import Report
from .rewrite import (
    EnvelopingJ,
    FiniteJ,
    JRingPresentation,
    NormalElement,
    check_overlaps,
    jtok,
    normalize,
    reachable_wedge_words,
)
from .superlin import Subspace, UnsupportedCharacteristic, kernel_of_map, vaxpy
from .superlin.linalg import CoordinateSystem


class ConfluenceError(ValueError):
    """Raised by ``build_H`` when the rewriting system is not confluent."""


class LieAxiomError(ValueError):
    pass


@dataclass(eq=False)
class DHCPData:
    presentation: JRingPresentation
    name: str = ""

    @property
    def J(self):
        return self.presentation.J

    @property
    def X(self) -> tuple[str, ...]:
        return self.presentation.X

    @property
    def field(self):
        return self.presentation.field

    @property
    def dim_V(self) -> int:
        return self.presentation.n

    def fmt_v(self, v: Mapping[int, object]) -> str:
        return format_vector(v, self.X, self.field)


# -- verification -------------------------------------------------------------

def _e(i: int, F) -> dict:
    return {i: F.one}


def _jletters(d: DHCPData) -> list[tuple[str, dict]]:
    """J-elements on which module and (a) are tested: a basis of finite J, or the Lie basis."""
    J = d.J
    return [(J.names[a], J.letter(a)) for a in J.letters()]


def verify_dhcp(d: DHCPData) -> Report:
    """Module axioms and conditions (a)–(d), evaluated exactly on basis tuples.

    For ``J = U(g)`` the module axioms and (a) are checked on the Lie basis,
    which generates J; both sides of (a) are then derivations in ``a``.
    Condition (c) is checked on basis vectors and, in characteristic 3, on
    every sum ``x_i + x_j`` as well.
    """
    P = d.presentation
    J, F, n = P.J, P.field, P.n
    rep = Report(f"dual Harish-Chandra pair {d.name}".strip())
    X = d.X

    # module
    bad = None
    if J.kind == "finite":
        for x in range(n):
            if P.act_element(_e(x, F), J.unit) != _e(x, F):
                bad = {"basis": [X[x], "1"], "lhs": d.fmt_v(P.act_element(_e(x, F), J.unit)), "rhs": X[x]}
                break
            for a in J.letters():
                xa = P.act_letter(x, a)
                for b in J.letters():
                    lhs = P.act_element(xa, J.letter(b))
                    rhs = P.act_element(_e(x, F), J.mul(J.letter(a), J.letter(b)))
                    if lhs != rhs:
                        bad = {"basis": [X[x], J.names[a], J.names[b]], "lhs": d.fmt_v(lhs), "rhs": d.fmt_v(rhs)}
                        break
                if bad:
                    break
            if bad:
                break
    else:
        for x in range(n):
            for a in J.letters():
                for b in range(a):
                    lhs = P.act(_e(x, F), (a, b))
                    vaxpy(lhs, P.act(_e(x, F), (b, a)), -1)
                    rhs = P.act_element(_e(x, F), J.lie_element(J.lie.bracket.get((a, b), {})))
                    if lhs != rhs:
                        bad = {"basis": [X[x], J.names[a], J.names[b]], "lhs": d.fmt_v(lhs), "rhs": d.fmt_v(rhs)}
                        break
                if bad:
                    break
            if bad:
                break
    rep.add("module", bad is None, bad)

    # (a) Σ [u◁a1, v◁a2] = Σ S(a1) [u,v] a2
    bad = None
    for u in range(n):
        for v in range(n):
            b = P.br(u, v)
            for aname, a in _jletters(d):
                lhs: dict = {}
                rhs: dict = {}
                for (k1, k2), c in J.coproduct(a).items():
                    a1, a2 = {k1: F.one}, {k2: F.one}
                    vaxpy(lhs, P.br_vec(P.act_element(_e(u, F), a1), P.act_element(_e(v, F), a2)), c)
                    vaxpy(rhs, J.mul(J.mul(J.antipode(a1), b), a2), c)
                if lhs != rhs:
                    bad = {"basis": [X[u], X[v], aname], "lhs": J.fmt(lhs), "rhs": J.fmt(rhs)}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("(a) equivariance", bad is None, bad)

    # (b) symmetry
    bad = None
    for u in range(n):
        for v in range(u + 1, n):
            if P.br(u, v) != P.br(v, u):
                bad = {"basis": [X[u], X[v]], "lhs": J.fmt(P.br(u, v)), "rhs": J.fmt(P.br(v, u))}
                break
        if bad:
            break
    rep.add("(b) symmetry", bad is None, bad)

    # (c) v◁[v,v] = 0
    family = [(X[i], _e(i, F)) for i in range(n)]
    if F.characteristic == 3:
        family += [(f"{X[i]}+{X[j]}", {i: F.one, j: F.one}) for i, j in combinations(range(n), 2)]
    bad = None
    for name, v in family:
        lhs = P.act_element(v, P.br_vec(v, v))
        if lhs:
            bad = {"basis": [name], "lhs": d.fmt_v(lhs), "rhs": "0"}
            break
    rep.add("(c) self-bracket", bad is None, bad)

    # (d) u◁[v,w] + v◁[w,u] + w◁[u,v] = 0
    bad = None
    for u in range(n):
        for v in range(n):
            for w in range(n):
                lhs = P.act_element(_e(u, F), P.br(v, w))
                vaxpy(lhs, P.act_element(_e(v, F), P.br(w, u)))
                vaxpy(lhs, P.act_element(_e(w, F), P.br(u, v)))
                if lhs:
                    bad = {"basis": [X[u], X[v], X[w]], "lhs": d.fmt_v(lhs), "rhs": "0"}
                    break
            if bad:
                break
        if bad:
            break
    rep.add("(d) cyclic", bad is None, bad)
    return rep


# -- from Lie superalgebras -----------------------------------------------------

def from_lie_superalgebra(L: LieSuperalgebra, name: str = "") -> DHCPData:
    """``(U(L0), L1)`` with the restricted adjoint action and bracket.

    Characteristic 3 is rejected: there the super-Jacobi identity gives the
    cyclic condition (d) but only ``3·v◁[v,v] = 0``, so condition (c) does not
    follow for a Lie superalgebra.
    """
    F = L.field
    if F.characteristic == 3:
        raise UnsupportedCharacteristic(
            "characteristic 3: super-Jacobi yields 3·[v,[v,v]] = 0 only, so the self-bracket "
            "condition (c) is not implied by the cyclic condition (d)"
        )
    rep = L.verify()
    if not rep.passed:
        f = rep.failures()[0]
        raise LieAxiomError(f"{f.name} fails at {f.witness}")
    even, odd = L.even(), L.odd()
    epos = {k: i for i, k in enumerate(even)}
    opos = {k: i for i, k in enumerate(odd)}
    gbr = {}
    for a in even:
        for b in even:
            v = L.bracket.get((a, b))
            if v:
                gbr[(epos[a], epos[b])] = {epos[k]: c for k, c in v.items()}
    g = LieSuperalgebra(F, tuple(L.names[k] for k in even), (0,) * len(even), gbr)
    J = EnvelopingJ(g)
    action = {}
    for x in odd:
        for h in even:
            v = L.bracket.get((x, h))
            if v:
                action[(opos[x], epos[h])] = {opos[k]: c for k, c in v.items()}
    bracket = {}
    for x in odd:
        for y in odd:
            v = L.bracket.get((x, y))
            if v:
                bracket[(opos[x], opos[y])] = J.lie_element({epos[k]: c for k, c in v.items()})
    P = JRingPresentation(J, tuple(L.names[k] for k in odd), action, bracket)
    return DHCPData(P, name)


# -- H(J, V) for finite J -----------------------------------------------------------

@dataclass(eq=False)
class HResult:
    """``H(J, V)`` on the basis ``a·x_S`` (``a`` a J-basis element, S a wedge word)."""

    pair: DHCPData
    hopf: HopfSuperAlgebraData
    keys: list[tuple[int, tuple[int, ...]]]

    def index(self, a: int, S: tuple[int, ...]) -> int:
        return self._pos[(a, S)]

    def __post_init__(self) -> None:
        self._pos = {k: i for i, k in enumerate(self.keys)}

    def vector(self, e: NormalElement) -> dict[int, object]:
        out: dict = {}
        for S, a in e.terms.items():
            for k, c in a.items():
                vaxpy(out, {self._pos[(k, S)]: c})
        return out

    def element(self, u: Mapping[int, object]) -> NormalElement:
        terms: dict = {}
        for i, c in u.items():
            a, S = self.keys[i]
            vaxpy(terms.setdefault(S, {}), {a: c})
        return NormalElement(self.pair.presentation, {S: v for S, v in terms.items() if v})


def _key_name(J, X, a: int, S: tuple[int, ...]) -> str:
    w = wedge_name(S, X)
    if not S:
        return J.names[a]
    if J.names[a] == "1" and J.unit == J.letter(a):
        return w
    return f"{J.names[a]}·{w}"


def build_H(d: DHCPData, check: bool = True) -> HResult:
    """Materialize ``H(J, V)`` for finite J.

    Products are normal forms of concatenations; ``Δ`` is ``Δ_J`` times the
    shuffle coproduct of the wedge word (all legs already normal); the
    antipode is ``S(a x_S) = S(x_S) S(a)`` normalized.
    """
    P = d.presentation
    J, F = P.J, P.field
    if J.kind != "finite":
        raise TypeError("build_H materializes finite J only; use EnvelopingH for U(g)")
    if check:
        ov = check_overlaps(P)
        if not ov.passed:
            f = ov.failures()[0]
            raise ConfluenceError(f"ambiguity {f.name} does not resolve: {f.witness}")
    wb = wedge_basis(P.n)
    keys = [(a, S) for S in wb for a in J.letters()]
    pos = {k: i for i, k in enumerate(keys)}

    def vec(e: NormalElement) -> dict:
        out: dict = {}
        for S, a in e.terms.items():
            for k, c in a.items():
                vaxpy(out, {pos[(k, S)]: c})
        return out

    def word(a, S):
        return (jtok(a),) + tuple(S)

    mult = {}
    for i, (a, S) in enumerate(keys):
        for j, (b, T) in enumerate(keys):
            v = vec(normalize({word(a, S) + word(b, T): F.one}, P))
            if v:
                mult[(i, j)] = v
    unit = {pos[(k, ())]: c for k, c in J.unit.items()}
    comult = []
    counit = []
    antipode = []
    hopf_J = J.hopf
    for a, S in keys:
        dd: dict = {}
        for (a1, a2), c in hopf_J.comult[a].items():
            for (T, U), s in wedge_coproduct(S).items():
                vaxpy(dd, {(pos[(a1, T)], pos[(a2, U)]): c * s})
        comult.append(dd)
        counit.append(hopf_J.counit[a] if not S else F.zero)
        n = len(S)
        sign = (-1) ** (n * (n - 1) // 2 + n)
        e: dict = {}
        for k, c in hopf_J.antipode[a].items():
            vaxpy(e, {tuple(reversed(S)) + (jtok(k),): c * sign})
        antipode.append(vec(normalize(e, P)))
    names = [_key_name(J, P.X, a, S) for a, S in keys]
    hopf = HopfSuperAlgebraData.build(
        F, [(nm, len(S) % 2) for nm, (a, S) in zip(names, keys)], mult, unit, comult, counit, antipode
    )
    return HResult(d, hopf, keys)


def pbw_rank(d: DHCPData) -> Report:
    """J-freeness of the wedge words: normal forms of ``a·x_S`` have full rank.

    Also records the set of wedge words reached by normalizing every word in
    X of length at most ``|X|``.
    """
    P = d.presentation
    J, F = P.J, P.field
    rep = Report("PBW basis")
    wb = wedge_basis(P.n)
    reached = reachable_wedge_words(P)
    rep.add("reachable wedge words", reached == set(wb), None, f"{len(reached)} of {len(wb)}")
    if J.kind == "finite":
        rows = []
        for S in wb:
            for a in J.letters():
                e = normalize({(jtok(a),) + S: F.one}, P)
                rows.append({(k, T): c for T, b in e.terms.items() for k, c in b.items()})
        r = Subspace(rows).dim
        rep.add("J-free rank", r == J.dim * len(wb), None, f"rank {r}, expected {J.dim * len(wb)}")
    return rep


def check_square_identity(h: HResult) -> Report:
    """``[v, v] = 2 v²`` in ``H(J, V)`` for each basis vector v."""
    P = h.pair.presentation
    F = P.field
    rep = Report("[v,v] = 2v^2")
    bad = None
    for x in range(P.n):
        vx = h.vector(normalize({(x,): F.one}, P))
        sq = h.hopf.mul(vx, vx)
        lhs = {h.index(k, ()): c for k, c in P.br(x, x).items()}
        rhs = {k: 2 * c for k, c in sq.items()}
        if lhs != rhs:
            bad = {"basis": [P.X[x]], "lhs": h.hopf.fmt(lhs), "rhs": h.hopf.fmt(rhs)}
            break
    rep.add("square identity", bad is None, bad)
    return rep


# -- H(U(g), V), procedurally ---------------------------------------------------------

class EnvelopingH:
    """``H(U(g), V)`` by normal forms; nothing is materialized beyond a degree bound.

    Basis keys are ``(m, S)`` with m a PBW monomial of g and S a wedge word;
    the filtration degree of ``m·x_S`` is ``len(m) + len(S)``.
    """

    def __init__(self, d: DHCPData) -> None:
        if d.J.kind != "enveloping":
            raise TypeError("EnvelopingH needs J = U(g)")
        self.pair = d
        self.P = d.presentation
        self.field = self.P.field
        self._cache: dict = {}

    def mul(self, u: NormalElement, v: NormalElement) -> NormalElement:
        """Bilinear extension of the (cached) product of basis monomials."""
        out: dict = {}
        for S, a in u.terms.items():
            for m, c in a.items():
                for T, b in v.terms.items():
                    for n, d in b.items():
                        vaxpy(out, self._mono_mul((m, S), (n, T)), c * d)
        terms: dict = {}
        for (m, S), c in out.items():
            terms.setdefault(S, {})[m] = c
        return NormalElement(self.P, terms)

    def _mono_mul(self, left: tuple, right: tuple) -> dict:
        key = (left, right)
        if key not in self._cache:
            (m, S), (n, T) = left, right
            one = self.field.one
            words: dict = {}
            for w1, c1 in self.P.jelement_word({m: one}).items():
                for w2, c2 in self.P.jelement_word({n: one}).items():
                    vaxpy(words, {w1 + S + w2 + T: c1 * c2})
            nf = normalize(words, self.P)
            self._cache[key] = {(p, A): x for A, a in nf.terms.items() for p, x in a.items()}
        return self._cache[key]

    def element(self, m: tuple[int, ...], S: tuple[int, ...]) -> NormalElement:
        return NormalElement(self.P, {S: {m: self.field.one}})

    def coproduct(self, u: NormalElement) -> dict[tuple, object]:
        """Keys ``((m1, S1), (m2, S2))``."""
        J = self.P.J
        out: dict = {}
        for S, a in u.terms.items():
            for (m1, m2), c in J.coproduct(a).items():
                for (T, U), s in wedge_coproduct(S).items():
                    vaxpy(out, {((m1, T), (m2, U)): c * s})
        return out

    def counit(self, u: NormalElement):
        return self.P.J.counit(u.terms.get((), {}))

    def antipode(self, u: NormalElement) -> NormalElement:
        J = self.P.J
        words: dict = {}
        for S, a in u.terms.items():
            n = len(S)
            sign = (-1) ** (n * (n - 1) // 2 + n)
            for m, c in J.antipode(a).items():
                vaxpy(words, {tuple(reversed(S)) + tuple(jtok(t) for t in m): c * sign})
        return normalize(words, self.P)

    def basis_upto(self, degree: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        from itertools import combinations_with_replacement

        g = self.P.J.dim
        out = []
        for S in wedge_basis(self.P.n):
            for k in range(degree - len(S) + 1):
                for m in combinations_with_replacement(range(g), k):
                    out.append((m, S))
        return sorted(out, key=lambda t: (len(t[0]) + len(t[1]), t[1], t[0]))

    def primitives_upto(self, degree: int) -> list[dict]:
        """Kernel of ``u -> Δu - 1⊗u - u⊗1`` on filtration degree ≤ ``degree``."""
        one = self.field.one
        images = {}
        for m, S in self.basis_upto(degree):
            t = self.coproduct(self.element(m, S))
            vaxpy(t, {(((), ()), (m, S)): one}, -1)
            vaxpy(t, {((m, S), ((), ())): one}, -1)
            images[(m, S)] = t
        return kernel_of_map(images, self.field, order=lambda k: (len(k[0]) + len(k[1]), k[1], k[0]))

    def kostant_check(self, degree: int = 4) -> Report:
        """Primitives in filtration degree ≤ ``degree`` equal ``g ⊕ V`` exactly."""
        rep = Report(f"primitives up to filtration degree {degree}")
        prim = Subspace(self.primitives_upto(degree))
        one = self.field.one
        lie = [{((a,), ()): one} for a in range(self.P.J.dim)] + [{((), (x,)): one} for x in range(self.P.n)]
        rep.add("dimension", prim.dim == len(lie), None, f"{prim.dim} vs {len(lie)}")
        rep.add("contains L", all(prim.contains(v) for v in lie))
        return rep

    def verify_upto(self, degree: int = 2) -> Report:
        """Associativity, multiplicativity of Δ and the antipode on low-degree basis elements."""
        rep = Report(f"H(U(g),V) axioms up to degree {degree}")
        basis = [self.element(m, S) for m, S in self.basis_upto(degree)]
        bad = None
        for u in basis:
            for v in basis:
                uv = self.mul(u, v)
                for w in basis[: self.P.J.dim + self.P.n + 1]:
                    lhs, rhs = self.mul(uv, w), self.mul(u, self.mul(v, w))
                    if lhs != rhs:
                        bad = {"lhs": lhs.fmt(), "rhs": rhs.fmt()}
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("associativity", bad is None, bad)
        bad = None
        for u in basis:
            for v in basis:
                lhs = self.coproduct(self.mul(u, v))
                rhs = self._tensor_mul(self.coproduct(u), self.coproduct(v))
                if lhs != rhs:
                    bad = {"lhs": u.fmt(), "rhs": v.fmt()}
                    break
            if bad:
                break
        rep.add("bialgebra", bad is None, bad)
        bad = None
        for u in basis:
            acc = NormalElement(self.P, {})
            for ((m1, S1), (m2, S2)), c in self.coproduct(u).items():
                prod = self.mul(self.antipode(self.element(m1, S1)), self.element(m2, S2))
                acc = acc - NormalElement(self.P, {k: {m: -c * x for m, x in a.items()} for k, a in prod.terms.items()})
            target = NormalElement(self.P, {(): {(): self.counit(u)}} if self.counit(u) != 0 else {})
            if acc != target:
                bad = {"basis": [u.fmt()], "lhs": acc.fmt(), "rhs": target.fmt()}
                break
        rep.add("antipode", bad is None, bad)
        return rep

    def _tensor_mul(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for ((m1, S1), (m2, S2)), c in x.items():
            for ((n1, T1), (n2, T2)), d in y.items():
                sign = -1 if (len(S2) % 2 and len(T1) % 2) else 1
                left = self._mono_mul((m1, S1), (n1, T1))
                right = self._mono_mul((m2, S2), (n2, T2))
                cd = c * d * sign
                for a, x1 in left.items():
                    for b, y1 in right.items():
                        vaxpy(out, {(a, b): cd * x1 * y1})
        return out


# -- the inverse construction -----------------------------------------------------------

@dataclass(eq=False)
class RecoveredPair:
    pair: DHCPData
    J_embedding: list[dict[int, object]]
    V_basis: list[dict[int, object]]


def recover_pair(h: HopfSuperAlgebraData, name: str = "") -> RecoveredPair:
    """``(underline H, odd primitives)`` with the adjoint action and ``[v, w] = vw + wv``."""
    if not verify_super_cocommutative(h).passed:
        raise NotCocommutativeError("recover_pair needs a super-cocommutative Hopf superalgebra")
    sub = underline(h)
    odd = odd_primitives(h)
    J = FiniteJ(sub.algebra)
    table = adjoint_action(h, sub, odd)
    action = {k: v for k, v in table.items() if v}
    bracket = {}
    for i, v in enumerate(odd):
        for j, w in enumerate(odd):
            b = h.mul(v, w)
            vaxpy(b, h.mul(w, v))
            if b:
                bracket[(i, j)] = sub.coords.coords(b)
    names = []
    for i, v in enumerate(odd):
        if len(v) == 1 and next(iter(v.values())) == 1:
            names.append(h.names[next(iter(v))])
        else:
            names.append(f"v{i + 1}")
    P = JRingPresentation(J, tuple(names), action, bracket)
    return RecoveredPair(DHCPData(P, name), sub.embedding, odd)


@dataclass(eq=False)
class PairMorphism:
    """``(f, g): (J1, V1) -> (J2, V2)``; f on J-basis elements, g on X letters."""

    source: DHCPData
    target: DHCPData
    f: list[dict]
    g: list[dict[int, object]]

    def hopf_map(self) -> MorphismData:
        return MorphismData(self.source.J.hopf, self.target.J.hopf, self.f)

    def apply_f(self, a: Mapping) -> dict:
        out: dict = {}
        for k, c in a.items():
            vaxpy(out, self.f[k], c)
        return out

    def apply_g(self, v: Mapping) -> dict:
        out: dict = {}
        for k, c in v.items():
            vaxpy(out, self.g[k], c)
        return out

    def verify(self) -> Report:
        """Hopf map on J; g intertwines actions; f intertwines brackets."""
        s, t = self.source.presentation, self.target.presentation
        rep = Report("pair morphism")
        rep.extend(self.hopf_map().verify(), "J: ")
        bad = None
        for x in range(s.n):
            for a in s.J.letters():
                lhs = self.apply_g(s.act_letter(x, a))
                rhs = t.act_element(self.g[x], self.f[a])
                if lhs != rhs:
                    bad = {"basis": [s.X[x], s.J.names[a]], "lhs": self.target.fmt_v(lhs), "rhs": self.target.fmt_v(rhs)}
                    break
            if bad:
                break
        rep.add("equivariant", bad is None, bad)
        bad = None
        for x in range(s.n):
            for y in range(s.n):
                lhs = self.apply_f(s.br(x, y))
                rhs = t.br_vec(self.g[x], self.g[y])
                if lhs != rhs:
                    bad = {"basis": [s.X[x], s.X[y]], "lhs": t.J.fmt(lhs), "rhs": t.J.fmt(rhs)}
                    break
            if bad:
                break
        rep.add("bracket", bad is None, bad)
        return rep

    def verify_isomorphism(self) -> Report:
        rep = self.verify()
        rep.add("J bijective", self.hopf_map().is_bijective())
        r = Subspace(self.g).dim
        rep.add("V bijective", r == self.source.dim_V == self.target.dim_V, None, f"rank {r}")
        return rep


def roundtrip_pair(d: DHCPData) -> tuple[PairMorphism, Report]:
    """``d -> recover_pair(build_H(d))`` via ``a -> a·1`` and ``x -> 1·x``; verified."""
    h = build_H(d)
    rec = recover_pair(h.hopf)
    P = d.presentation
    F = P.field
    jcs = CoordinateSystem(rec.J_embedding, F)
    vcs = CoordinateSystem(rec.V_basis, F)
    f = [jcs.coords({h.index(a, ()): F.one}) for a in P.J.letters()]
    g = []
    for x in range(P.n):
        g.append(vcs.coords({h.index(k, (x,)): c for k, c in P.J.unit.items()}))
    m = PairMorphism(d, rec.pair, f, g)
    return m, m.verify_isomorphism()


def alpha_roundtrip(h: HopfSuperAlgebraData) -> tuple[MorphismData, Report]:
    """``build_H(recover_pair(H)) -> H``, ``a·x_S -> a v_{s1} ... v_{sk}``; verified isomorphism."""
    rec = recover_pair(h)
    hh = build_H(rec.pair)
    images = []
    for a, S in hh.keys:
        u = dict(rec.J_embedding[a])
        for s in S:
            u = h.mul(u, rec.V_basis[s])
        images.append(u)
    m = MorphismData(hh.hopf, h, images)
    return m, m.verify_isomorphism()


# -- normality and exactness (finite J) --------------------------------------------------

@dataclass
class NormalityResult:
    normal: bool
    failed_condition: str | None
    report: Report


def _span(vectors: Sequence[Mapping]) -> Subspace:
    return Subspace([dict(v) for v in vectors if v])


def check_morphism_normal(m: PairMorphism) -> NormalityResult:
    """Normality of an injective pair morphism through conditions (i)–(iv).

    (i) ``f(J1)`` is stable under the adjoint action of J2; (ii) ``g(V1)`` is
    J2-stable; (iii) ``[g(V1), V2] ⊆ f(J1)``; (iv) ``v◁f(a) - ε(a)v ∈ g(V1)``.
    """
    s, t = m.source.presentation, m.target.presentation
    if s.J.kind != "finite" or t.J.kind != "finite":
        raise TypeError("normality checks need finite J")
    F = t.field
    J2 = t.J
    if not m.hopf_map().is_injective() or Subspace(m.g).dim != s.n:
        raise ValueError("the morphism is not injective")
    rep = Report("normality")
    rep.extend(m.verify(), "morphism: ")
    fJ = _span(m.f)
    gV = _span(m.g)
    bad = None
    for a in fJ.basis():
        for b in J2.letters():
            out: dict = {}
            for (p, q), c in J2.coproduct(J2.letter(b)).items():
                vaxpy(out, J2.mul(J2.mul(J2.antipode({p: F.one}), a), {q: F.one}), c)
            if not fJ.contains(out):
                bad = {"basis": [J2.fmt(a), J2.names[b]], "lhs": J2.fmt(out), "rhs": "in f(J1)"}
                break
        if bad:
            break
    rep.add("(i) normal Hopf subalgebra", bad is None, bad)
    bad = None
    for v in gV.basis():
        for b in J2.letters():
            out = t.act_element(v, J2.letter(b))
            if not gV.contains(out):
                bad = {"basis": [m.target.fmt_v(v), J2.names[b]], "lhs": m.target.fmt_v(out), "rhs": "in g(V1)"}
                break
        if bad:
            break
    rep.add("(ii) stable image", bad is None, bad)
    bad = None
    for v in gV.basis():
        for y in range(t.n):
            out = t.br_vec(v, {y: F.one})
            if not fJ.contains(out):
                bad = {"basis": [m.target.fmt_v(v), t.X[y]], "lhs": J2.fmt(out), "rhs": "in f(J1)"}
                break
        if bad:
            break
    rep.add("(iii) bracket into f(J1)", bad is None, bad)
    bad = None
    for y in range(t.n):
        for a in s.J.letters():
            out = t.act_element({y: F.one}, m.f[a])
            vaxpy(out, {y: s.J.hopf.counit[a]}, -1)
            if not gV.contains(out):
                bad = {"basis": [t.X[y], s.J.names[a]], "lhs": m.target.fmt_v(out), "rhs": "in g(V1)"}
                break
        if bad:
            break
    rep.add("(iv) trivial action modulo g(V1)", bad is None, bad)
    failed = next((c.name for c in rep.checks if not c.passed), None)
    return NormalityResult(rep.passed, failed, rep)


def hopf_sequence_exact(f1: MorphismData, f2: MorphismData) -> Report:
    """``J1 -> J2 -> J3`` short exact: f1 injective, f2 surjective,
    ``f1(J1) = J2^{co f2}`` and ``ker f2 = J2·f1(J1)^+``."""
    J2 = f1.target
    F = J2.field
    rep = Report("Hopf sequence")
    rep.add("injective", f1.is_injective())
    rep.add("surjective", f2.is_surjective())
    # right coinvariants {b : Σ b1⊗f2(b2) = b⊗1}
    images = {}
    for i in range(J2.dim):
        t: dict = {}
        for (p, q), c in J2.comult[i].items():
            for k, x in f2.images[q].items():
                vaxpy(t, {(p, k): c * x})
        for k, x in f2.target.unit.items():
            vaxpy(t, {(i, k): x}, -1)
        images[i] = t
    co = Subspace(kernel_of_map(images, F))
    im = _span(f1.images)
    same = co.dim == im.dim and all(co.contains(v) for v in im.basis())
    rep.add("image = coinvariants", same, None, f"dim {im.dim} vs {co.dim}")
    plus = []
    for v in im.basis():
        w = dict(v)
        vaxpy(w, J2.unit, -J2.eps(v))
        if w:
            plus.append(w)
    ideal = _span([J2.mul(J2.e(i), p) for i in range(J2.dim) for p in plus])
    ker = Subspace(kernel_of_map({i: f2.images[i] for i in range(J2.dim)}, F))
    same = ker.dim == ideal.dim and all(ker.contains(v) for v in ideal.basis())
    rep.add("kernel = J2·f1(J1)+", same, None, f"dim {ker.dim} vs {ideal.dim}")
    return rep


def vector_sequence_exact(g1: list[dict], g2: list[dict], dims: tuple[int, int, int], field) -> Report:
    rep = Report("vector sequence")
    n1, n2, n3 = dims
    r1 = Subspace(g1).dim
    r2 = Subspace(g2).dim
    rep.add("injective", r1 == n1, None, f"rank {r1} of {n1}")
    rep.add("surjective", r2 == n3, None, f"rank {r2} of {n3}")
    ker = Subspace(kernel_of_map({i: g2[i] for i in range(n2)}, field))
    im = _span(g1)
    same = ker.dim == im.dim and all(ker.contains(v) for v in im.basis())
    rep.add("image = kernel", same, None, f"dim {im.dim} vs {ker.dim}")
    return rep


def check_short_exact_dhcp(m1: PairMorphism, m2: PairMorphism) -> Report:
    """Both the Hopf-algebra sequence and the vector-space sequence are short exact."""
    rep = Report("short exact sequence of pairs")
    rep.extend(m1.verify(), "first: ")
    rep.extend(m2.verify(), "second: ")
    rep.extend(hopf_sequence_exact(m1.hopf_map(), m2.hopf_map()), "J: ")
    rep.extend(
        vector_sequence_exact(m1.g, m2.g, (m1.source.dim_V, m1.target.dim_V, m2.target.dim_V), m1.source.field),
        "V: ",
    )
    return rep
