"""Exact dense linear algebra over the rationals.

Ranks, kernel bases, linear solves and quotient dimensions for matrices
with arbitrary-precision Fraction entries.  This is the sole numeric
substrate of the package: every dimension reported downstream is an exact
integer, so a tolerance-based floating-point rank would certify nothing.

Pivoting is always "first nonzero in column order".  That makes every
echelon form, kernel basis, solution and certificate deterministic across
runs and platforms.

Rank uses fraction-free (Bareiss) elimination on an integer-rescaled copy
of the matrix; kernels and solves use reduced row echelon form over
Fractions.  Both strategies are exact, they only trade speed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value) -> Fraction:
    """Coerce an int, string like "3/4", or Fraction to a Fraction.

    Floats are rejected on purpose; nothing in this package may round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"matrix entries must be exact rationals, got {value!r}")


class Matrix:
    """Dense rational matrix with value semantics.

    Instances are never mutated by public operations.  Zero-row and
    zero-column shapes are fully supported: they carry no entries but keep
    both dimensions, which is what lets zero-dimensional stalks flow
    through the rest of the package without special cases.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError(f"matrix shape ({rows}, {cols}) is negative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._data = [[_ZERO] * cols for _ in range(rows)]
        else:
            data = [[_coerce(x) for x in row] for row in entries]
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"entries do not have shape ({rows}, {cols})")
            self._data = data

    @classmethod
    def _raw(cls, rows: int, cols: int, data: list) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        data = [[_ZERO] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = _ONE
        return cls._raw(n, n, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, columns, rows: int | None = None) -> "Matrix":
        cols = [list(map(_coerce, c)) for c in columns]
        if rows is None:
            if not cols:
                raise ValueError("row count required for a matrix with no columns")
            rows = len(cols[0])
        if any(len(c) != rows for c in cols):
            raise ValueError("columns have inconsistent lengths")
        data = [[c[i] for c in cols] for i in range(rows)]
        return cls._raw(rows, len(cols), data)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return tuple(self._data[i])

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> list:
        return [list(r) for r in self._data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._data == other._data

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return all(not x for row in self._data for x in row)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, [[-x for x in row] for row in self._data])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_match(other)
        data = [[x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)]
        return Matrix._raw(self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_match(other)
        data = [[x - y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)]
        return Matrix._raw(self.rows, self.cols, data)

    def _shape_match(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: ({self.rows}, {self.cols}) vs ({other.rows}, {other.cols})"
            )

    def scaled(self, c) -> "Matrix":
        c = _coerce(c)
        return Matrix._raw(self.rows, self.cols, [[c * x for x in row] for row in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply ({self.rows}, {self.cols}) by ({other.rows}, {other.cols})"
            )
        bdata = other._data
        out = []
        for arow in self._data:
            acc = [_ZERO] * other.cols
            for k, a in enumerate(arow):
                if a:
                    brow = bdata[k]
                    if a == 1:
                        acc = [x + y if y else x for x, y in zip(acc, brow)]
                    else:
                        acc = [x + a * y if y else x for x, y in zip(acc, brow)]
            out.append(acc)
        return Matrix._raw(self.rows, other.cols, out)

    def apply(self, vector) -> tuple:
        """Matrix-vector product, returned as a tuple of Fractions."""
        vec = [_coerce(x) for x in vector]
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not fit {self.cols} columns")
        out = []
        for row in self._data:
            s = _ZERO
            for a, x in zip(row, vec):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        data = [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix._raw(self.cols, self.rows, data)

    # -- elimination ----------------------------------------------------

    def rank(self) -> int:
        """Exact rank via fraction-free integer elimination.

        Rows are rescaled to integers first (rank is invariant under row
        scaling); Bareiss division keeps the intermediate entries at the
        size of minors instead of compounding.
        """
        if self.rows == 0 or self.cols == 0:
            return 0
        data = []
        for row in self._data:
            den = 1
            for x in row:
                d = x.denominator
                if d != 1:
                    den = den * d // gcd(den, d)
            data.append([x.numerator * (den // x.denominator) for x in row])
        rows, cols = self.rows, self.cols
        r = 0
        prev = 1
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if data[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                data[r], data[pr] = data[pr], data[r]
            piv = data[r][c]
            prow = data[r]
            for i in range(r + 1, rows):
                row = data[i]
                f = row[c]
                if f:
                    data[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
                elif piv != prev:
                    data[i] = [piv * x // prev if x else 0 for x in row]
            prev = piv
            r += 1
            if r == rows:
                break
        return r

    def rref(self) -> tuple:
        """Reduced row echelon form.  Returns (Matrix, pivot column tuple)."""
        data = [list(row) for row in self._data]
        pivots = _rref_in_place(data, self.rows, self.cols)
        return Matrix._raw(self.rows, self.cols, data), tuple(pivots)

    def kernel_basis(self) -> "Matrix":
        """Matrix whose columns are a basis of the right kernel.

        The basis is the canonical one read off the RREF: one column per
        free variable, in ascending free-column order, with a 1 in the
        free slot.  Deterministic by construction.
        """
        data = [list(row) for row in self._data]
        pivots = _rref_in_place(data, self.rows, self.cols)
        return _kernel_from_rref(data, pivots, self.cols)


RationalMatrix = Matrix


def _rref_in_place(data: list, rows: int, cols: int, pivot_limit: int | None = None) -> list:
    """Gauss-Jordan elimination over Fractions, pivoting on the first
    nonzero entry of each column.  Returns the pivot column list."""
    limit = cols if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, rows):
            if data[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            data[r], data[pr] = data[pr], data[r]
        prow = data[r]
        piv = prow[c]
        if piv != 1:
            inv = Fraction(piv.denominator, piv.numerator)
            data[r] = prow = [x * inv if x else x for x in prow]
        for i in range(rows):
            if i != r:
                f = data[i][c]
                if f:
                    row = data[i]
                    data[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _kernel_from_rref(data: list, pivots: list, cols: int) -> Matrix:
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    columns = []
    for fc in free:
        v = [_ZERO] * cols
        v[fc] = _ONE
        for i, pc in enumerate(pivots):
            x = data[i][fc]
            if x:
                v[pc] = -x
        columns.append(v)
    if not columns:
        return Matrix(cols, 0)
    return Matrix.from_columns(columns, rows=cols)


def hstack(matrices) -> Matrix:
    mats = list(matrices)
    if not mats:
        raise ValueError("hstack of no matrices")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack requires equal row counts")
    data = [sum((list(m._data[i]) for m in mats), []) for i in range(rows)]
    return Matrix._raw(rows, sum(m.cols for m in mats), data)


def vstack(matrices) -> Matrix:
    mats = list(matrices)
    if not mats:
        raise ValueError("vstack of no matrices")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("vstack requires equal column counts")
    data = []
    for m in mats:
        data.extend(list(row) for row in m._data)
    return Matrix._raw(len(data), cols, data)


def block_diagonal(matrices) -> Matrix:
    mats = list(matrices)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    data = [[_ZERO] * cols for _ in range(rows)]
    r0 = 0
    c0 = 0
    for m in mats:
        for i in range(m.rows):
            row = data[r0 + i]
            mrow = m._data[i]
            for j in range(m.cols):
                x = mrow[j]
                if x:
                    row[c0 + j] = x
        r0 += m.rows
        c0 += m.cols
    return Matrix._raw(rows, cols, data)


@dataclass
class SolveResult:
    """Outcome of an exact linear solve M x = b.

    consistent   -- whether any solution exists
    particular   -- one solution (free variables set to zero), or None
    kernel       -- basis of ker M as matrix columns (the solution set is
                    particular + span(kernel))
    certificate  -- on inconsistency, a row vector y with y M = 0 and
                    y b != 0, which proves no solution exists
    """

    consistent: bool
    particular: tuple | None
    kernel: Matrix
    certificate: tuple | None


def solve(m: Matrix, b) -> SolveResult:
    """Solve M x = b exactly, with a proof either way.

    Eliminates the augmented block [M | b | I] with pivots restricted to
    the columns of M.  Any leftover row with a nonzero b-part is a linear
    combination of the original equations that reads 0 = nonzero; its I
    part is returned as the inconsistency certificate.
    """
    vec = [_coerce(x) for x in b]
    if len(vec) != m.rows:
        raise ValueError(f"right-hand side of length {len(vec)} does not fit {m.rows} rows")
    rows, cols = m.rows, m.cols
    data = []
    for i in range(rows):
        row = list(m._data[i])
        row.append(vec[i])
        row.extend(_ONE if k == i else _ZERO for k in range(rows))
        data.append(row)
    pivots = _rref_in_place(data, rows, cols + 1 + rows, pivot_limit=cols)
    rank = len(pivots)
    for i in range(rank, rows):
        if data[i][cols]:
            certificate = tuple(data[i][cols + 1:])
            kernel = _kernel_from_rref([r[:cols] for r in data], pivots, cols)
            return SolveResult(False, None, kernel, certificate)
    particular = [_ZERO] * cols
    for i, pc in enumerate(pivots):
        particular[pc] = data[i][cols]
    kernel = _kernel_from_rref([r[:cols] for r in data], pivots, cols)
    return SolveResult(True, tuple(particular), kernel, None)


def solve_matrix(m: Matrix, rhs: Matrix) -> Matrix | None:
    """Particular solution X of M X = B (free variables zero), or None
    if some column of B is outside the column space of M."""
    if rhs.rows != m.rows:
        raise ValueError(f"rhs has {rhs.rows} rows, expected {m.rows}")
    rows, cols, k = m.rows, m.cols, rhs.cols
    data = [list(m._data[i]) + list(rhs._data[i]) for i in range(rows)]
    pivots = _rref_in_place(data, rows, cols + k, pivot_limit=cols)
    rank = len(pivots)
    for i in range(rank, rows):
        if any(data[i][cols + j] for j in range(k)):
            return None
    out = [[_ZERO] * k for _ in range(cols)]
    for i, pc in enumerate(pivots):
        out[pc] = data[i][cols:]
    return Matrix._raw(cols, k, out)


def quotient_dimension(big: Matrix, small: Matrix) -> int:
    """Dimension of span(big columns) / span(small columns).

    Requires the span of small to sit inside the span of big; the first
    offending column is reported otherwise.
    """
    if big.rows != small.rows:
        raise ValueError(f"ambient dimensions differ: {big.rows} vs {small.rows}")
    rank_big = big.rank()
    if small.cols:
        combined = hstack([big, small])
        if combined.rank() != rank_big:
            for j in range(small.cols):
                if not solve(big, small.column(j)).consistent:
                    raise ValueError(f"column {j} of the small space is outside the big space")
    return rank_big - small.rank()
