"""Lie superalgebras by structure constants, with super-Jacobi checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .report import Report
from .superlin import FieldSpec, vaxpy
from .hopfcore.algebra import format_vector


def _sign(p: int, q: int) -> int:
    return -1 if p & q else 1


@dataclass(eq=False)
class LieSuperalgebra:
    """``bracket[(i, j)]`` is ``[e_i, e_j]`` as a sparse vector; missing means 0."""

    field: FieldSpec
    names: tuple[str, ...]
    parities: tuple[int, ...]
    bracket: dict[tuple[int, int], dict[int, object]]

    @property
    def dim(self) -> int:
        return len(self.names)

    def br(self, u: Mapping[int, object], v: Mapping[int, object]) -> dict[int, object]:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.bracket.get((i, j))
                if w:
                    vaxpy(out, w, a * b)
        return out

    def fmt(self, u) -> str:
        return format_vector(u, self.names, self.field)

    def even(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]

    def verify(self) -> Report:
        """Parity, super-antisymmetry and super-Jacobi on all basis tuples."""
        rep = Report("Lie superalgebra axioms")
        n, par, one = self.dim, self.parities, self.field.one
        bad = None
        for (i, j), w in self.bracket.items():
            if any(par[k] != (par[i] + par[j]) % 2 for k in w):
                bad = {"basis": [self.names[i], self.names[j]], "lhs": self.fmt(w), "rhs": "parity " + str((par[i] + par[j]) % 2)}
                break
        rep.add("parity", bad is None, bad)
        bad = None
        for i in range(n):
            for j in range(i, n):
                a = self.bracket.get((i, j), {})
                b = {k: -_sign(par[i], par[j]) * x for k, x in self.bracket.get((j, i), {}).items()}
                if a != b:
                    bad = {"basis": [self.names[i], self.names[j]], "lhs": self.fmt(a), "rhs": self.fmt(b)}
                    break
            if bad:
                break
        rep.add("super-antisymmetry", bad is None, bad)
        # [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        bad = None
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    ei, ej, ek = {i: one}, {j: one}, {k: one}
                    lhs = self.br(ei, self.br(ej, ek))
                    rhs = self.br(self.br(ei, ej), ek)
                    vaxpy(rhs, self.br(ej, self.br(ei, ek)), _sign(par[i], par[j]))
                    if lhs != rhs:
                        bad = {"basis": [self.names[x] for x in (i, j, k)], "lhs": self.fmt(lhs), "rhs": self.fmt(rhs)}
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("super-Jacobi", bad is None, bad)
        return rep


def lie_from_names(field: FieldSpec, basis: list[tuple[str, int]], table: Mapping[tuple[str, str], Mapping[str, object]], complete: bool = True) -> LieSuperalgebra:
    """Build from ``{(a, b): {c: coeff}}``; with ``complete`` the opposite
    entries ``[b, a]`` are filled in by super-antisymmetry when absent."""
    names = tuple(n for n, _ in basis)
    pars = tuple(p for _, p in basis)
    pos = {n: i for i, n in enumerate(names)}
    br: dict = {}
    for (a, b), v in table.items():
        vec = {pos[c]: field(x) if not isinstance(x, str) else field.parse(x) for c, x in v.items()}
        vec = {k: x for k, x in vec.items() if x != 0}
        if vec:
            br[(pos[a], pos[b])] = vec
    if complete:
        for (i, j), v in list(br.items()):
            if (j, i) not in br and i != j:
                s = -_sign(pars[i], pars[j])
                br[(j, i)] = {k: s * x for k, x in v.items()}
    return LieSuperalgebra(field, names, pars, br)
