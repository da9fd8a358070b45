"""Exact linear algebra over Q(zeta_24): row reduction and square matrices."""

from __future__ import annotations

import numpy as np

from .scalar import ONE, ZERO, ExactScalar, to_complex


def as_scalar(x):
    return x if isinstance(x, ExactScalar) else ExactScalar(x)


class RowEchelon:
    """Incrementally maintained reduced row-echelon basis of a row space.

    Rows are lists of ExactScalar of a fixed width. ``add`` returns True when
    the row was independent of everything seen so far.
    """

    def __init__(self, width):
        self.width = width
        self.rows = {}  # pivot column -> normalized row

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        row = [as_scalar(x) for x in row]
        for col in sorted(self.rows):
            c = row[col]
            if c:
                piv = self.rows[col]
                row = [a - c * b if b else a for a, b in zip(row, piv)]
        return row

    def add(self, row):
        row = self.reduce(row)
        col = next((k for k, x in enumerate(row) if x), None)
        if col is None:
            return False
        inv = row[col].inverse()
        row = [x * inv if x else x for x in row]
        for other_col, other in list(self.rows.items()):
            c = other[col]
            if c:
                self.rows[other_col] = [a - c * b if b else a for a, b in zip(other, row)]
        self.rows[col] = row
        return True

    def nullspace(self):
        """Basis of {x : row . x = 0 for all rows}."""
        free = [k for k in range(self.width) if k not in self.rows]
        basis = []
        for f in free:
            v = [ZERO] * self.width
            v[f] = ONE
            for col, row in self.rows.items():
                v[col] = -row[f]
            basis.append(v)
        return basis


def rank(rows, width=None):
    rows = list(rows)
    ech = RowEchelon(width if width is not None else (len(rows[0]) if rows else 0))
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows, width):
    ech = RowEchelon(width)
    for r in rows:
        ech.add(r)
    return ech.nullspace()


def solve(columns, target):
    """Coefficients c with sum_k c_k columns[k] == target, or None if inconsistent.

    ``columns`` and ``target`` are equal-length vectors. When the columns are
    dependent an arbitrary particular solution is returned.
    """
    ncols = len(columns)
    ech = RowEchelon(ncols + 1)
    for r in range(len(target)):
        ech.add([columns[k][r] for k in range(ncols)] + [target[r]])
    if ncols in ech.rows:
        return None
    coeffs = [ZERO] * ncols
    for col, row in ech.rows.items():
        coeffs[col] = row[ncols]
    return coeffs


class SquareMatrix:
    """Immutable n x n matrix with ExactScalar entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == k else ZERO for k in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls([[values[i] if i == k else ZERO for k in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, k):
        """Matrix with a single 1 at 0-based position (i, k)."""
        return cls([[ONE if (r, c) == (i, k) else ZERO for c in range(n)] for r in range(n)])

    def __getitem__(self, ik):
        i, k = ik
        return self.rows[i][k]

    def __add__(self, other):
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return SquareMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return SquareMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = as_scalar(c)
        return SquareMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, SquareMatrix):
            raise TypeError("use @ for the matrix product")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SquareMatrix(out) if n else self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = SquareMatrix.identity(self.n)
        for _ in range(e):
            result = result @ self
        return result

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"SquareMatrix([{body}])"

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def transpose(self):
        return SquareMatrix(list(zip(*self.rows)))

    def conjugate(self):
        return SquareMatrix([[x.conjugate() for x in r] for r in self.rows])

    def trace(self):
        acc = ZERO
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        """Determinant by Gaussian elimination over the field."""
        m = [list(r) for r in self.rows]
        n = self.n
        det = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det

    def inverse(self):
        n = self.n
        m = [list(r) + [ONE if i == k else ZERO for k in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[p] = m[p], m[c]
            inv = m[c][c].inverse()
            m[c] = [x * inv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return SquareMatrix([row[n:] for row in m])

    def flatten(self):
        return [x for r in self.rows for x in r]

    def to_complex(self):
        return np.array([[to_complex(x) for x in r] for r in self.rows], dtype=complex)
