"""Exact matrices with Scalar or MPoly entries.

Determinants over a field use fraction-free style Gaussian elimination;
polynomial-entry determinants and adjugates use division-free minor
expansion (dynamic programming over column subsets), so results are
exact in any coefficient ring.
"""

from __future__ import annotations

from .mpoly import MPoly
from .scalar import ONE, ZERO, Scalar, scalar


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, m: int) -> "Matrix":
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = [scalar(e) if isinstance(e, (int, str)) else e for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        return cls([[_entry(e) for e in r] for r in rows])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else self

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.nrows
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.nrows):
            t = t + self.rows[i][i]
        return t

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scaled(self, c) -> "Matrix":
        return Matrix([[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            cols = other.transpose().rows
            return Matrix([[_dot(r, c) for c in cols] for r in self.rows])
        if isinstance(other, (list, tuple)):
            return self.apply(other)
        return self.scaled(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        return [_dot(r, vec) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return "Matrix(%s)" % "; ".join(
            ", ".join(str(e) for e in r) for r in self.rows)


def _entry(e):
    if isinstance(e, (MPoly, Scalar)):
        return e
    return scalar(e)


def _dot(r, c):
    acc = None
    for a, b in zip(r, c):
        p = a * b
        acc = p if acc is None else acc + p
    return acc


# ---------------------------------------------------------------------
# determinants


def det(m: Matrix):
    """Exact determinant; field elimination for Scalars, division-free
    minor expansion for polynomial entries."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    if m.nrows == 0:
        return ONE
    if isinstance(m.rows[0][0], Scalar):
        return _det_field(m.rows)
    return _det_ring([list(r) for r in m.rows])


def _det_field(rows):
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    detv = ONE
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pval = a[col][col]
        detv = detv * pval
        inv = ONE / pval
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return detv if sign > 0 else -detv


def _det_ring(rows, cols=None, cache=None):
    """Expansion along the first row of the submatrix, memoized on the
    column subset (the row prefix is determined by its size)."""
    n = len(rows)
    if cols is None:
        cols = tuple(range(n))
        cache = {}
    if len(cols) == 1:
        return rows[n - 1][cols[0]]
    got = cache.get(cols)
    if got is not None:
        return got
    i = n - len(cols)
    acc = None
    for k, c in enumerate(cols):
        e = rows[i][c]
        if not e:
            continue
        rest = cols[:k] + cols[k + 1:]
        term = e * _det_ring(rows, rest, cache)
        if k % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        z = rows[0][0]
        acc = z - z  # zero of the entry ring
    cache[cols] = acc
    return acc


def minor(m: Matrix, drop_row: int, drop_col: int):
    rows = [[e for j, e in enumerate(r) if j != drop_col]
            for i, r in enumerate(m.rows) if i != drop_row]
    return det(Matrix(rows))


def adjugate(m: Matrix) -> "Matrix":
    """adj(M) with M * adj(M) = det(M) * I, exactly."""
    if not m.is_square():
        raise ValueError("adjugate of a non-square matrix")
    n = m.nrows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = minor(m, j, i)
            if (i + j) % 2 == 1:
                c = -c
            row.append(c)
        out.append(row)
    return Matrix(out)


# ---------------------------------------------------------------------
# elimination over the field of Scalars


def _row_reduce(rows):
    """In-place reduced row echelon form; returns pivot column list."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = None
        for k in range(r, nr):
            if rows[k][c]:
                piv = k
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(nr):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return pivots


def rank(m: Matrix) -> int:
    rows = [list(r) for r in m.rows]
    return len(_row_reduce(rows))


def nullspace(m: Matrix) -> list:
    """Deterministic basis of the right kernel (free variable set to 1)."""
    rows = [list(r) for r in m.rows]
    pivots = _row_reduce(rows)
    nc = m.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * nc
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs) -> list | None:
    """One solution of M x = rhs, or None if inconsistent."""
    rows = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    pivots = _row_reduce(rows)
    nc = m.ncols
    if nc in pivots:
        return None
    x = [ZERO] * nc
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][nc]
    return x


def inverse(m: Matrix) -> "Matrix":
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)]
            for i, r in enumerate(m.rows)]
    pivots = _row_reduce(rows)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix([r[n:] for r in rows])


def congruent_diagonalize(m: Matrix):
    """(T, D) with T invertible and T^t M T = D diagonal; M symmetric."""
    if not m.is_symmetric():
        raise ValueError("congruent diagonalization needs a symmetric matrix")
    n = m.nrows
    a = [list(r) for r in m.rows]
    t = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def col_op(dst, src, f):
        for r in range(n):
            a[r][dst] = a[r][dst] + f * a[r][src]
            t[r][dst] = t[r][dst] + f * t[r][src]

    def row_op(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]

    def swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
            t[r][i], t[r][j] = t[r][j], t[r][i]
        a[i], a[j] = a[j], a[i]

    for i in range(n):
        if not a[i][i]:
            j = next((k for k in range(i + 1, n) if a[k][k]), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((k for k in range(i + 1, n) if a[i][k]), None)
                if j is None:
                    continue
                col_op(i, j, ONE)
                row_op(i, j, ONE)
        d = a[i][i]
        for j in range(i + 1, n):
            if a[i][j]:
                f = -a[i][j] / d
                col_op(j, i, f)
                row_op(j, i, f)
    return Matrix(t), Matrix(a)
