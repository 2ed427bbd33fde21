"""Exact scalar fields: the rationals and prime fields of odd characteristic.

Scalars are plain Python objects supporting ``+ - * /`` and comparison with
integers, so the rest of the package is written once for every field.
Rationals are :class:`fractions.Fraction`; residues mod ``p`` are instances of
a small class created per prime.

>>> F = FieldSpec.prime(5)
>>> F.parse("3/4")
2
>>> F(7) * F(3)
1
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any


class FieldError(ValueError):
    """Malformed field declaration or scalar literal."""


class UnsupportedCharacteristic(ValueError):
    """Raised for characteristic 2 and for Lie superalgebras in characteristic 3."""


_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class _Residue:
    """Element of Z/p; subclasses fix ``p``."""

    __slots__ = ("v",)
    p: int = 0

    def __init__(self, v: int) -> None:
        self.v = v % self.p

    def _coerce(self, other: Any) -> int | None:
        if type(other) is type(self):
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v + o)

    __radd__ = __add__

    def __sub__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v - o)

    def __rsub__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(o - self.v)

    def __mul__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return type(self)(self.v * pow(o, -1, self.p))

    def __rtruediv__(self, other: Any):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return type(self)(o * pow(self.v, -1, self.p))

    def __neg__(self):
        return type(self)(-self.v)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return type(self)(pow(pow(self.v, -1, self.p), -n, self.p))
        return type(self)(pow(self.v, n, self.p))

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self) -> int:
        return hash((self.p, self.v))

    def __bool__(self) -> bool:
        return self.v != 0

    def __repr__(self) -> str:
        return str(self.v)

    __str__ = __repr__


@lru_cache(maxsize=None)
def _residue_class(p: int) -> type:
    return type(f"F{p}", (_Residue,), {"__slots__": (), "p": p})


class FieldSpec:
    """A scalar field: ``FieldSpec.rational()`` or ``FieldSpec.prime(p)``."""

    __slots__ = ("kind", "characteristic", "_cls")

    def __init__(self, kind: str, characteristic: int) -> None:
        if kind == "rational":
            if characteristic != 0:
                raise FieldError("the rational field has characteristic 0")
            self._cls = None
        elif kind == "prime":
            if characteristic == 2:
                raise UnsupportedCharacteristic("characteristic 2 is not supported")
            if not _is_prime(characteristic):
                raise FieldError(f"{characteristic} is not a prime")
            self._cls = _residue_class(characteristic)
        else:
            raise FieldError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.characteristic = characteristic

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational", 0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @classmethod
    def from_string(cls, text: str) -> FieldSpec:
        """Accepts ``Q``, ``Fp:<p>``, ``F<p>`` and ``GF(<p>)``."""
        t = text.strip()
        if t in ("Q", "QQ", "rational"):
            return cls.rational()
        m = re.fullmatch(r"(?:Fp:|F|GF\()(\d+)\)?", t)
        if not m:
            raise FieldError(f"cannot parse field {text!r}; use Q or Fp:<p>")
        return cls.prime(int(m.group(1)))

    @property
    def char(self) -> int:
        return self.characteristic

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x: Any):
        if self._cls is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, _Residue):
                raise FieldError("cannot lift a residue to the rationals")
            raise FieldError(f"not a scalar: {x!r}")
        if isinstance(x, self._cls):
            return x
        if isinstance(x, (int, Fraction)):
            if isinstance(x, Fraction) and x.denominator % self.characteristic == 0:
                raise FieldError(f"{x} has no reduction mod {self.characteristic}")
            r = self._cls(0)
            r.v = r._coerce(x)
            return r
        raise FieldError(f"not a scalar: {x!r}")

    def parse(self, text: Any):
        """Parse a literal such as ``"3/4"`` or ``"-1"`` (ints also accepted)."""
        if isinstance(text, bool) or not isinstance(text, (str, int)):
            raise FieldError(f"scalar literal must be a string, got {text!r}")
        if isinstance(text, int):
            return self(text)
        m = _SCALAR_RE.match(text)
        if not m:
            raise FieldError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return self(Fraction(num, den))

    def format(self, x) -> str:
        x = self(x)
        if self._cls is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def reduce_from(self, x):
        """Map a rational scalar into this field (identity over Q)."""
        return self(x)

    def name(self) -> str:
        return "Q" if self._cls is None else f"Fp:{self.characteristic}"

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, FieldSpec) and (self.kind, self.characteristic) == (
            other.kind,
            other.characteristic,
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.characteristic))

    def __repr__(self) -> str:
        return f"FieldSpec({self.name()})"


QQ = FieldSpec.rational()
