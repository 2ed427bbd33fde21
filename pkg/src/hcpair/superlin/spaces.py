"""Super vector spaces with named bases, sparse super vectors, and pairings."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping

from .field import FieldSpec
from .linalg import kernel, vaxpy


@dataclass(frozen=True)
class SuperSpace:
    """Ordered named basis with a parity (0 even, 1 odd) per basis symbol."""

    names: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be distinct")
        if len(self.names) != len(self.parities):
            raise ValueError("one parity per basis symbol")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> SuperSpace:
        pairs = list(pairs)
        return cls(tuple(n for n, _ in pairs), tuple(p for _, p in pairs))

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def parity(self, name: str) -> int:
        return self.parities[self.index(name)]

    def tensor(self, other: SuperSpace) -> SuperSpace:
        names = tuple(f"{a}⊗{b}" for a in self.names for b in other.names)
        pars = tuple((p + q) % 2 for p in self.parities for q in other.parities)
        return SuperSpace(names, pars)

    def even_part(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_part(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]


@dataclass(frozen=True)
class SuperVector:
    """Sparse vector in a :class:`SuperSpace`; zero coefficients are dropped."""

    space: SuperSpace
    coeffs: Mapping[str, object] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        for k in self.coeffs:
            if k not in self.space.names:
                raise ValueError(f"{k!r} is not a basis symbol")
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v != 0})

    def parity(self) -> int | None:
        """Common parity of the support, or ``None`` if inhomogeneous (0 for the zero vector)."""
        ps = {self.space.parity(k) for k in self.coeffs}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.parity() is not None

    def __add__(self, other: SuperVector) -> SuperVector:
        return SuperVector(self.space, vaxpy(dict(self.coeffs), other.coeffs))

    def scale(self, c) -> SuperVector:
        return SuperVector(self.space, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperVector) and self.space == other.space and dict(self.coeffs) == dict(other.coeffs)


@dataclass(frozen=True)
class PairingData:
    """Bilinear form ``left x right -> k`` by its sparse matrix on basis names."""

    left: SuperSpace
    right: SuperSpace
    matrix: Mapping[tuple[str, str], object]

    def __post_init__(self) -> None:
        clean = {k: v for k, v in self.matrix.items() if v != 0}
        for (a, b) in clean:
            if self.left.parity(a) != self.right.parity(b):
                raise ValueError(f"pairing {a},{b} joins different parities")
        object.__setattr__(self, "matrix", clean)

    def __call__(self, u: SuperVector, w: SuperVector):
        total = 0
        for a, x in u.coeffs.items():
            for b, y in w.coeffs.items():
                m = self.matrix.get((a, b))
                if m is not None:
                    total = total + x * y * m
        return total

    def entry(self, a: str, b: str):
        return self.matrix.get((a, b), 0)


def koszul_swap(V: SuperSpace, W: SuperSpace) -> dict[str, dict[str, int]]:
    """Matrix of ``v⊗w -> (-1)^{|v||w|} w⊗v`` as column name -> image vector."""
    out = {}
    for a, p in zip(V.names, V.parities):
        for b, q in zip(W.names, W.parities):
            out[f"{a}⊗{b}"] = {f"{b}⊗{a}": -1 if p * q else 1}
    return out


def compose_maps(g: Mapping[str, Mapping], f: Mapping[str, Mapping]) -> dict[str, dict]:
    """Composite ``g ∘ f`` of maps given as column name -> image vector."""
    out = {}
    for col, img in f.items():
        acc: dict = {}
        for k, c in img.items():
            vaxpy(acc, g.get(k, {}), c)
        out[col] = acc
    return out


def tensor_pairing(p: PairingData, q: PairingData) -> PairingData:
    """``⟨v⊗z, w⊗u⟩ = ⟨v,w⟩⟨z,u⟩`` on ``(V⊗Z) x (W⊗U)`` (no Koszul sign)."""
    mat = {}
    for (v, w), x in p.matrix.items():
        for (z, u), y in q.matrix.items():
            mat[(f"{v}⊗{z}", f"{w}⊗{u}")] = x * y
    return PairingData(p.left.tensor(q.left), p.right.tensor(q.right), mat)


def annihilator(vectors: Iterable[SuperVector], p: PairingData, field: FieldSpec) -> list[SuperVector]:
    """Basis of ``{w : ⟨v, w⟩ = 0 for all given v}`` in reduced echelon form."""
    order = {n: i for i, n in enumerate(p.right.names)}
    rows = []
    for v in vectors:
        row: dict = {}
        for a, x in v.coeffs.items():
            for b in p.right.names:
                m = p.matrix.get((a, b))
                if m is not None:
                    vaxpy(row, {b: m}, x)
        rows.append(row)
    ker = kernel(rows, p.right.names, field, order=order.__getitem__)
    return [SuperVector(p.right, k) for k in ker]
