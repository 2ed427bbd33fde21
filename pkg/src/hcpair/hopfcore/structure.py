"""Primitives, radicals, coradicals, smash coproducts and structural predicates."""
from __future__ import annotations

from dataclasses import dataclass

from ..lie import LieSuperalgebra
from ..report import Report
from ..superlin import SuperSpace, kernel_of_map, vaxpy
from ..superlin.linalg import CoordinateSystem, Subspace
from .algebra import (
    HopfSuperAlgebraData,
    NotCocommutativeError,
    SubHopf,
    SuperCoalgebra,
    restrict,
    verify_super_cocommutative,
)


def _sign(p: int, q: int) -> int:
    return -1 if p & q else 1


def one_tensor(h: HopfSuperAlgebraData, u: dict, left: bool) -> dict:
    """``1⊗u`` (``left=True``) or ``u⊗1`` as a tensor dict."""
    out: dict = {}
    for k, a in h.unit.items():
        for i, b in u.items():
            vaxpy(out, {((k, i) if left else (i, k)): a * b})
    return out


@dataclass(eq=False)
class Primitives:
    """Homogeneous basis of ``P(H)`` with the super-commutator table."""

    hopf: HopfSuperAlgebraData
    basis: list[dict[int, object]]
    parities: list[int]
    lie: LieSuperalgebra
    report: Report

    @property
    def dim(self) -> int:
        return len(self.basis)

    def odd(self) -> list[dict[int, object]]:
        return [b for b, p in zip(self.basis, self.parities) if p == 1]

    def even(self) -> list[dict[int, object]]:
        return [b for b, p in zip(self.basis, self.parities) if p == 0]


def super_commutator(h: HopfSuperAlgebraData, u: dict, v: dict, pu: int, pv: int) -> dict:
    out = h.mul(u, v)
    vaxpy(out, h.mul(v, u), -_sign(pu, pv))
    return out


def primitive_space(h: HopfSuperAlgebraData, parity: int | None = None) -> list[dict[int, object]]:
    """Basis of primitives, optionally restricted to one parity (echelon form)."""
    idx = [i for i in range(h.dim) if parity is None or h.parity[i] == parity]
    images = {}
    for i in idx:
        e = h.e(i)
        img = dict(h.comult[i])
        vaxpy(img, one_tensor(h, e, True), -1)
        vaxpy(img, one_tensor(h, e, False), -1)
        images[i] = img
    return kernel_of_map(images, h.field)


def is_primitive(h: HopfSuperAlgebraData, u: dict) -> bool:
    img = h.delta(u)
    vaxpy(img, one_tensor(h, u, True), -1)
    vaxpy(img, one_tensor(h, u, False), -1)
    return not img


def primitives(h: HopfSuperAlgebraData) -> Primitives:
    """``P(H)`` with its bracket; closure, antisymmetry and Jacobi are checked."""
    even = primitive_space(h, 0)
    odd = primitive_space(h, 1)
    basis = even + odd
    pars = [0] * len(even) + [1] * len(odd)
    names = tuple(f"p{i}" for i in range(len(basis)))
    rep = Report("primitives")
    table: dict = {}
    closed = True
    if basis:
        cs = CoordinateSystem(basis, h.field)
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                br = super_commutator(h, u, v, pars[i], pars[j])
                try:
                    c = cs.coords(br)
                except ValueError:
                    closed = False
                    rep.add("bracket-closure", False, {"pair": [h.fmt(u), h.fmt(v)], "bracket": h.fmt(br)})
                    break
                if c:
                    table[(i, j)] = c
            if not closed:
                break
    if closed:
        rep.add("bracket-closure", True)
    lie = LieSuperalgebra(h.field, names, tuple(pars), table)
    lrep = lie.verify()
    rep.extend(lrep)
    return Primitives(h, basis, pars, lie, rep)


# -- radical / coradical ---------------------------------------------------

def algebra_radical(h: HopfSuperAlgebraData) -> list[dict[int, object]]:
    """Jacobson radical as the kernel of the trace form ``(x, y) -> tr(L_{xy})``.

    For a unital algebra over a field of characteristic 0 or p > dim, this
    kernel is an ideal of nilpotent elements containing every nilpotent
    ideal, hence equals the radical.  Smaller p falls back to the Frobenius
    kernel (commutative) or the trace-power iteration (noncommutative).
    """
    n = h.dim
    F = h.field
    p = F.characteristic
    if p and p <= n:
        if _is_commutative(h):
            return _frobenius_nilradical(h)
        return _trace_power_radical(h)
    tr = [F.zero] * n
    for (l, k), v in h.mult.items():
        c = v.get(k)
        if c is not None:
            tr[l] = tr[l] + c
    images = {}
    for i in range(n):
        row = {}
        for j in range(n):
            t = F.zero
            for l, c in h.mult.get((i, j), {}).items():
                t = t + c * tr[l]
            if t != 0:
                row[j] = t
        images[i] = row
    return kernel_of_map(images, F)


def _is_commutative(h: HopfSuperAlgebraData) -> bool:
    return all(h.mult.get((i, j), {}) == h.mult.get((j, i), {}) for i in range(h.dim) for j in range(i + 1, h.dim))


def _frobenius_nilradical(h: HopfSuperAlgebraData) -> list[dict[int, object]]:
    """Nilradical of a commutative algebra over F_p as ``ker(x -> x^(p^k))``.

    Over the prime field the Frobenius map is linear on a commutative
    algebra, and every nilpotent element of an n-dimensional algebra has
    ``x^n = 0``, so ``p^k >= n`` suffices.  For commutative algebras the
    nilradical is the Jacobson radical.
    """
    p, n = h.field.characteristic, h.dim
    q = p
    while q < n:
        q *= p
    images = {}
    for i in range(n):
        x = dict(h.unit)
        base = h.e(i)
        e = q
        while e:  # square-and-multiply
            if e & 1:
                x = h.mul(x, base)
            base = h.mul(base, base)
            e >>= 1
        images[i] = x
    return kernel_of_map(images, h.field)


def _trace_power_radical(h: HopfSuperAlgebraData) -> list[dict[int, object]]:
    """Radical over F_p for any p, by the trace-power iteration of Ronyai and Cohen-Ivanyos-Wales.

    With ``g_i(a) = (tr(L~_a^(p^i)) mod p^(i+1)) / p^i`` on integer lifts of the
    regular representation, ``I_i = {a in I_(i-1) : g_i(ab) = 0 for all b}``
    and the chain stops at the radical after ``floor(log_p n)`` steps.  Over
    the prime field ``g_i`` is linear on ``I_(i-1)``, so it is evaluated on a
    basis only and extended through coordinates.
    """
    F = h.field
    p, n = F.characteristic, h.dim
    left = [[[0] * n for _ in range(n)] for _ in range(n)]  # left[i][k][j]: e_k coefficient of e_i e_j
    for (i, j), v in h.mult.items():
        for k, c in v.items():
            left[i][k][j] = c.v
    steps = 0
    while p ** (steps + 1) <= n:
        steps += 1

    def g(x: dict, i: int) -> object:
        mod = p ** (i + 1)
        m = [[sum(c.v * left[a][r][col] for a, c in x.items()) % p for col in range(n)] for r in range(n)]
        for _ in range(i):  # m <- m^p
            power = m
            for _ in range(p - 1):
                power = _matmul_mod(power, m, mod)
            m = power
        return F((sum(m[r][r] for r in range(n)) % mod) // p ** i)

    ideal = [h.e(i) for i in range(n)]
    for i in range(steps + 1):
        values = [g(u, i) for u in ideal]
        cs = CoordinateSystem(ideal, F)
        images: dict = {k: {} for k in range(len(ideal))}
        for j in range(n):
            for k, u in enumerate(ideal):
                val = sum((c * values[t] for t, c in cs.coords(h.mul(u, h.e(j))).items()), F.zero)
                if val != 0:
                    images[k][j] = val
        ideal = [_combine(ideal, c) for c in kernel_of_map(images, F)]
        if not ideal:
            break
    return Subspace(ideal).basis() if ideal else []


def _matmul_mod(a: list, b: list, mod: int) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % mod for col in cols] for row in a]


def _combine(vectors: list[dict], coeffs: dict) -> dict:
    out: dict = {}
    for k, c in coeffs.items():
        vaxpy(out, vectors[k], c)
    return out


def dual_algebra_of(c: SuperCoalgebra) -> HopfSuperAlgebraData:
    """Algebra structure on ``C*`` (convolution), unit = counit; other maps omitted."""
    mult: dict = {}
    for k in range(c.dim):
        for (i, j), x in c.comult[k].items():
            mult.setdefault((i, j), {})[k] = x
    return HopfSuperAlgebraData(
        field=c.field,
        space=SuperSpace(tuple(f"{n}*" for n in c.names), c.parity),
        comult=[{} for _ in range(c.dim)],
        counit=[c.field.zero] * c.dim,
        mult=mult,
        unit={i: x for i, x in enumerate(c.counit) if x != 0},
        antipode=[{} for _ in range(c.dim)],
    )


def coradical(c: SuperCoalgebra) -> list[dict[int, object]]:
    """Basis of ``Corad C``: the annihilator of ``Rad(C*)`` in ``C``."""
    rad = algebra_radical(dual_algebra_of(c))
    # f(c) = sum f_i c_i in dual bases, so the annihilator is a kernel
    images = {i: {r: v[i] for r, v in enumerate(rad) if i in v} for i in range(c.dim)}
    return kernel_of_map(images, c.field)


def _augmentation_ideal_nilpotent(h: HopfSuperAlgebraData) -> bool:
    """Whether ``{f in H* : f(1) = 0}`` is a nilpotent ideal of the dual algebra."""
    d = dual_algebra_of(h)
    F = h.field
    # functionals vanishing on the unit of H
    images = {i: ({0: h.unit[i]} if i in h.unit else {}) for i in range(h.dim)}
    m = kernel_of_map(images, F)
    power = list(m)
    for _ in range(h.dim + 1):
        if not power:
            return True
        nxt = Subspace()
        for a in power:
            for b in m:
                nxt.add(d.mul(a, b))
        if nxt.dim == len(power):
            return False
        power = nxt.basis()
    return not power


def is_irreducible(h: HopfSuperAlgebraData, method: str = "nilpotent") -> bool:
    """``Corad H = k·1``.

    ``method="nilpotent"`` works in every characteristic: the coradical is
    ``k·1`` exactly when the augmentation ideal of ``H*`` is nilpotent.
    ``method="coradical"`` computes the coradical itself.
    """
    if method == "coradical":
        return len(coradical(h)) == 1
    return _augmentation_ideal_nilpotent(h)


def is_semisimple_algebra(h: HopfSuperAlgebraData) -> bool:
    return not algebra_radical(h)


def is_purely_even(h) -> bool:
    return all(p == 0 for p in h.parity)


# -- smash coproduct -------------------------------------------------------

def smash_coproduct_Z2(c: SuperCoalgebra) -> SuperCoalgebra:
    """Ordinary coalgebra on ``kZ2⊗C``: ``Δ(i⊗c) = Σ (i⊗c1)⊗((|c1|+i)⊗c2)``.

    Basis index of ``i⊗c_k`` is ``i*dim C + k``.
    """
    n = c.dim
    names = tuple(f"{i}⊗{x}" for i in (0, 1) for x in c.names)
    comult = []
    counit = []
    for i in (0, 1):
        for k in range(n):
            d = {}
            for (a, b), x in c.comult[k].items():
                j = (c.parity[a] + i) % 2
                d[(i * n + a, j * n + b)] = x
            comult.append(d)
            counit.append(c.counit[k])
    return SuperCoalgebra(c.field, SuperSpace(names, (0,) * (2 * n)), comult, counit)


def check_smash_coradical(c: SuperCoalgebra) -> Report:
    """Compare ``Corad(Z2⋉C)`` with ``Z2⋉Corad C`` (dimension and both containments)."""
    rep = Report("coradical of the Z2 smash coproduct")
    n = c.dim
    smash = smash_coproduct_Z2(c)
    lhs = Subspace(coradical(smash))
    base = coradical(c)
    rhs = Subspace([{i * n + k: x for k, x in v.items()} for i in (0, 1) for v in base])
    rep.add("dimension", lhs.dim == rhs.dim, None, f"{lhs.dim} vs {rhs.dim}")
    rep.add("lhs-in-rhs", all(rhs.contains(v) for v in lhs.basis()))
    rep.add("rhs-in-lhs", all(lhs.contains(v) for v in rhs.basis()))
    return rep


# -- the ordinary part and odd primitives ---------------------------------

def _require_cocommutative(h: HopfSuperAlgebraData) -> None:
    if not verify_super_cocommutative(h).passed:
        raise NotCocommutativeError("input must be super-cocommutative")


def underline(h: HopfSuperAlgebraData) -> SubHopf:
    """Largest ordinary subcoalgebra ``Δ^{-1}(H0⊗H0)``, as a sub-Hopf algebra."""
    _require_cocommutative(h)
    par = h.parity
    images = {}
    for i in range(h.dim):
        images[i] = {k: x for k, x in h.comult[i].items() if par[k[0]] or par[k[1]]}
        if par[i]:
            images[i][("odd", i)] = h.field.one  # force the kernel into H0
    ker = kernel_of_map(images, h.field)
    names = [_vector_name(h, v) for v in ker]
    return restrict(h, ker, names)


def _vector_name(h: HopfSuperAlgebraData, v: dict) -> str:
    if len(v) == 1:
        (i, x), = v.items()
        if x == 1:
            return h.names[i]
    return "(" + h.fmt(v) + ")"


def odd_primitives(h: HopfSuperAlgebraData) -> list[dict[int, object]]:
    _require_cocommutative(h)
    return primitive_space(h, 1)


def adjoint_action(h: HopfSuperAlgebraData, sub: SubHopf | None = None, odd: list[dict] | None = None):
    """Table ``(i, j) -> coords of v_i ◁ a_j`` with ``v◁a = Σ S(a1) v a2``.

    ``a_j`` runs over the basis of ``underline(H)`` and ``v_i`` over the
    basis of ``V_H``; raises if the action leaves ``V_H``.
    """
    if sub is None:
        sub = underline(h)
    if odd is None:
        odd = odd_primitives(h)
    table = {}
    if not odd:
        return table
    cs = CoordinateSystem(odd, h.field)
    for j, a in enumerate(sub.embedding):
        da = h.delta(a)
        for i, v in enumerate(odd):
            out: dict = {}
            for (p, q), c in da.items():
                vaxpy(out, h.mul(h.mul(h.antipode[p], v), h.e(q)), c)
            table[(i, j)] = cs.coords(out)
    return table
