"""Exact sparse linear algebra over any :class:`FieldSpec`.

Vectors are dicts ``key -> scalar`` with no stored zeros.  Matrices are lists
of such dicts (rows).  Elimination always pivots on the smallest available
column key, so every echelon form produced here is canonical: equal row
spaces give identical output.
"""
from __future__ import annotations

from typing import Hashable, Iterable, Mapping

Vec = dict


def vadd(u: Mapping, v: Mapping, c=1) -> dict:
    """Return ``u + c*v`` as a new pruned dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y == 0:
            out.pop(k, None)
        else:
            out[k] = y
    return out


def vaxpy(u: dict, v: Mapping, c=1) -> dict:
    """In place ``u += c*v``; returns ``u``."""
    if c == 0:
        return u
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y == 0:
            u.pop(k, None)
        else:
            u[k] = y
    return u


def vscale(v: Mapping, c) -> dict:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items() if c * x != 0}


def vprune(v: Mapping) -> dict:
    return {k: x for k, x in v.items() if x != 0}


def vsum(terms: Iterable[tuple[Mapping, object]]) -> dict:
    out: dict = {}
    for v, c in terms:
        vaxpy(out, v, c)
    return out


class Subspace:
    """Row space of a set of vectors, kept in reduced row-echelon form.

    Pivots are the smallest keys under ``order`` (default: natural sort of
    the keys).  ``coords`` reads coordinates off the pivot entries, which is
    valid because the basis is fully reduced.
    """

    def __init__(self, vectors: Iterable[Mapping] = (), order=None) -> None:
        self._order = order
        self.rows: dict[Hashable, dict] = {}
        for v in vectors:
            self.add(v)

    def _key(self, k):
        return self._order(k) if self._order else k

    def reduce(self, v: Mapping) -> dict:
        """Residue of ``v`` modulo the subspace (zero on all pivots)."""
        r = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = r.get(p, 0)
            if c != 0:
                vaxpy(r, self.rows[p], -c)
        return r

    def add(self, v: Mapping) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r, key=self._key)
        if isinstance(r[p], int):
            raise TypeError("plain int scalar reached elimination; coerce through a FieldSpec")
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c != 0:
                vaxpy(row, r, -c)
        self.rows[p] = r
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows, key=self._key)

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in self.pivots]

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def coords(self, v: Mapping) -> list:
        """Coordinates of ``v`` in :meth:`basis`; raises if ``v`` is outside."""
        if self.reduce(v):
            raise ValueError("vector is not in the subspace")
        return [v.get(p, 0) for p in self.pivots]

    def __len__(self) -> int:
        return self.dim


def rref(rows: Iterable[Mapping], order=None) -> list[dict]:
    return Subspace(rows, order).basis()


def rank(rows: Iterable[Mapping]) -> int:
    return Subspace(rows).dim


def kernel(rows: Iterable[Mapping], columns: Iterable[Hashable], field, order=None) -> list[dict]:
    """Basis of ``{x : M x = 0}`` where ``M`` has the given rows.

    ``columns`` lists every column key (unknown).  The result is returned in
    reduced echelon form, so it is canonical.
    """
    cols = list(columns)
    sub = Subspace(rows, order)
    pivots = set(sub.rows)
    free = [c for c in cols if c not in pivots]
    vecs = []
    for f in free:
        x = {f: field.one}
        for p, row in sub.rows.items():
            c = row.get(f, 0)
            if c != 0:
                x[p] = -c
        vecs.append(x)
    return rref(vecs, order)


def columns_to_rows(cols: Mapping[Hashable, Mapping]) -> list[dict]:
    """Transpose a map ``column key -> image vector`` into equation rows."""
    rows: dict = {}
    for j, img in cols.items():
        for i, x in img.items():
            rows.setdefault(i, {})[j] = x
    return list(rows.values())


def kernel_of_map(images: Mapping[Hashable, Mapping], field, order=None) -> list[dict]:
    """Kernel of the linear map sending basis key ``j`` to ``images[j]``."""
    return kernel(columns_to_rows(images), images.keys(), field, order)


def solve(rows: list[Mapping], rhs: list, columns: Iterable[Hashable]):
    """One solution of ``M x = b`` or ``None``; ``rhs[i]`` pairs with ``rows[i]``."""
    marker = object()
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b != 0:
            row[marker] = b
        aug.append(row)
    cols = list(columns)
    index = {c: i for i, c in enumerate(cols)}
    index[marker] = len(cols)
    sub = Subspace(aug, order=lambda k: index[k])
    if marker in sub.rows:
        return None
    x = {}
    for p, row in sub.rows.items():
        b = row.get(marker, 0)
        if b != 0:
            x[p] = b
    return x


def inverse(matrix: list[list], field) -> list[list] | None:
    """Inverse of a dense square matrix, or ``None`` when singular."""
    n = len(matrix)
    rows = []
    for i in range(n):
        r = {("a", j): field(matrix[i][j]) for j in range(n) if matrix[i][j] != 0}
        r[("b", i)] = field.one
        rows.append(r)
    sub = Subspace(rows, order=lambda k: (0 if k[0] == "a" else 1, k[1]))
    if any(p[0] != "a" for p in sub.rows) or sub.dim != n:
        return None
    out = [[field.zero] * n for _ in range(n)]
    for p, row in sub.rows.items():
        for k, x in row.items():
            if k[0] == "b":
                out[p[1]][k[1]] = x
    return out


def dense_rank(matrix: list[list]) -> int:
    return rank({j: x for j, x in enumerate(row) if x != 0} for row in matrix)


def matmul(a: list[list], b: list[list], field) -> list[list]:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = [[field.zero] * k for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(m):
            x = ai[t]
            if x != 0:
                bt = b[t]
                for j in range(k):
                    if bt[j] != 0:
                        oi[j] = oi[j] + x * bt[j]
    return out


def determinant(matrix: list[list], field):
    """Determinant by Gaussian elimination with exact field operations."""
    n = len(matrix)
    a = [[field(x) for x in row] for row in matrix]
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f != 0:
                for j in range(c, n):
                    a[r][j] = a[r][j] - f * a[c][j]
    return det


class CoordinateSystem:
    """Coordinates with respect to a fixed list of independent vectors.

    Unlike :class:`Subspace`, the given vectors themselves are the basis.
    ``coords`` checks membership exactly and raises ``ValueError`` otherwise.
    """

    def __init__(self, vectors: list[Mapping], field) -> None:
        self.vectors = [dict(v) for v in vectors]
        self.field = field
        k = len(self.vectors)
        tagged = []
        for i, v in enumerate(self.vectors):
            row = {("v", c): x for c, x in v.items()}
            row[("t", i)] = field.one
            tagged.append(row)
        sub = Subspace(tagged, order=lambda key: (0 if key[0] == "v" else 1, _sort_key(key[1])))
        if any(p[0] != "v" for p in sub.rows) or sub.dim != k:
            raise ValueError("vectors are linearly dependent")
        # row for pivot column c reads: e_c-part + sum_t m[t] tag_t, i.e.
        # the coordinate functional at c is given by the tag entries.
        self._functional: dict[Hashable, dict[int, object]] = {}
        for p, row in sub.rows.items():
            self._functional[p[1]] = {key[1]: x for key, x in row.items() if key[0] == "t"}
        self._span = Subspace(self.vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords_unchecked(self, v: Mapping) -> dict[int, object]:
        out: dict[int, object] = {}
        for c, x in v.items():
            f = self._functional.get(c)
            if f:
                vaxpy(out, f, x)
        return out

    def coords(self, v: Mapping) -> dict[int, object]:
        out = self.coords_unchecked(v)
        back: dict = {}
        for i, x in out.items():
            vaxpy(back, self.vectors[i], x)
        if vadd(back, v, -1):
            raise ValueError("vector is not in the span")
        return out

    def contains(self, v: Mapping) -> bool:
        return self._span.contains(v)


def _sort_key(k):
    return k if isinstance(k, tuple) else (k,)
