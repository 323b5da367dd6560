"""Exact dense linear algebra over the prime field F_p, p = 2^61 - 1.

Matrices are lists of rows of ints in [0, p). Everything is deterministic:
elimination always picks the first nonzero entry as pivot. The prime is large
enough that every randomized construction in one pipeline run stays far below
any noticeable failure probability, and small enough that Python int products
stay cheap.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

PRIME = (1 << 61) - 1


def inverse(a: int) -> int:
    a %= PRIME
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, PRIME - 2, PRIME)


class FieldMatrix:
    def __init__(self, rows: Sequence[Sequence[int]], ncols: Optional[int] = None):
        self.rows = [[x % PRIME for x in row] for row in rows]
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols does not match rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "FieldMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.rows[i][i] = 1
        return m

    def copy(self) -> "FieldMatrix":
        return FieldMatrix([list(r) for r in self.rows], self.ncols)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.rows]

    def columns(self, js: Iterable[int]) -> "FieldMatrix":
        js = list(js)
        return FieldMatrix([[row[j] for j in js] for row in self.rows], len(js))

    def rref(self) -> tuple["FieldMatrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        m = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            sel = None
            for i in range(r, len(m)):
                if m[i][col]:
                    sel = i
                    break
            if sel is None:
                continue
            m[r], m[sel] = m[sel], m[r]
            iv = inverse(m[r][col])
            m[r] = [x * iv % PRIME for x in m[r]]
            lead = m[r]
            for i in range(len(m)):
                if i != r and m[i][col]:
                    f = m[i][col]
                    m[i] = [(x - f * y) % PRIME for x, y in zip(m[i], lead)]
            pivots.append(col)
            r += 1
            if r == len(m):
                break
        return FieldMatrix(m, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def rank_of_columns(self, js: Iterable[int]) -> int:
        basis = IncrementalBasis()
        for j in js:
            basis.add(self.column(j))
        return len(basis)


def dualize(m: FieldMatrix) -> FieldMatrix:
    """Representation of the dual matroid, columns kept in their original order.

    Brings m to [I | B] by row reduction (up to the column permutation induced
    by the pivot positions) and returns [-B^T | I] with the permutation undone.
    Requires full row rank.
    """
    red, pivots = m.rref()
    if len(pivots) != m.nrows:
        raise ValueError("matrix must have full row rank")
    pivot_set = set(pivots)
    non_pivots = [j for j in range(m.ncols) if j not in pivot_set]
    out = FieldMatrix.zeros(len(non_pivots), m.ncols)
    for i, q in enumerate(non_pivots):
        out.rows[i][q] = 1
        for j, p in enumerate(pivots):
            out.rows[i][p] = (-red.rows[j][q]) % PRIME
    return out


def wedge3_coordinates(a: Sequence[int], b: Sequence[int], c: Sequence[int],
                       d1: int, d2: int) -> list[int]:
    """Coordinates of a ^ b ^ c when a, b live on the first d1 rows and c on the last d2.

    Index order: pairs {i < j} of first-block rows lexicographically, unit l of
    the second block innermost. Output length is C(d1, 2) * d2.
    """
    if len(a) != d1 + d2 or len(b) != d1 + d2 or len(c) != d1 + d2:
        raise ValueError("vector length must be d1 + d2")
    if any(x % PRIME for x in a[d1:]) or any(x % PRIME for x in b[d1:]):
        raise ValueError("a and b must vanish on the second block")
    if any(x % PRIME for x in c[:d1]):
        raise ValueError("c must vanish on the first block")
    out = []
    for i in range(d1):
        ai = a[i] % PRIME
        bi = b[i] % PRIME
        for j in range(i + 1, d1):
            minor = (ai * b[j] - a[j] * bi) % PRIME
            for l in range(d2):
                out.append(minor * c[d1 + l] % PRIME)
    return out


class IncrementalBasis:
    """Grow a basis one vector at a time; add() reports linear independence."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = []
        self._pivot_of: dict[int, int] = {}  # pivot column -> row index

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        v = [x % PRIME for x in vec]
        for col, ri in sorted(self._pivot_of.items()):
            if v[col]:
                f = v[col]
                row = self._rows[ri]
                v = [(x - f * y) % PRIME for x, y in zip(v, row)]
        return v

    def add(self, vec: Sequence[int]) -> bool:
        v = self.reduce(vec)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        iv = inverse(v[pivot])
        self._pivot_of[pivot] = len(self._rows)
        self._rows.append([x * iv % PRIME for x in v])
        return True

    def contains(self, vec: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(vec))
