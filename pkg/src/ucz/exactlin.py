"""Exact rational linear algebra: immutable matrices and canonical subspaces.

Scalars are `fractions.Fraction` (aliased `Rat`), so every computation here is
exact; nothing in this module ever rounds.  A `Subspace` is stored as the
reduced row-echelon basis of its row space, which makes equality of subspaces
literal equality of the stored data.  All values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DecompositionError, DimensionError

Rat = Fraction

Vector = tuple[Rat, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vec(values: Iterable) -> Vector:
    """Coerce an iterable of numbers into an exact rational vector."""
    return tuple(Fraction(v) for v in values)


def vec_add(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"vector lengths differ: {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"vector lengths differ: {len(a)} != {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def is_zero_vec(a: Vector) -> bool:
    return all(x == 0 for x in a)


class Mat:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise DimensionError("ragged matrix data")
        self._data = rows

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        """Build a matrix, allowing an empty row list if `cols` is given."""
        if not rows:
            m = Mat.__new__(Mat)
            m.rows = 0
            m.cols = 0 if cols is None else cols
            m._data = ()
            return m
        return Mat(rows)

    @staticmethod
    def zeros(r: int, c: int) -> "Mat":
        return Mat.from_rows([[_ZERO] * c for _ in range(r)], cols=c)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def row_list(self) -> list[Vector]:
        return list(self._data)

    def __getitem__(self, key) -> Rat:
        i, j = key
        return self._data[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Mat({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("matrix shapes differ in add")
        return Mat([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)])

    def __sub__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("matrix shapes differ in sub")
        return Mat([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in row] for row in self._data])

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        return Mat([[c * a for a in row] for row in self._data])

    def __mul__(self, other: "Mat") -> "Mat":
        # sparse-friendly: skip zero entries of the left factor
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ in mul")
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        bdata = other._data
        for i, arow in enumerate(self._data):
            orow = out[i]
            for k, a in enumerate(arow):
                if a == 0:
                    continue
                brow = bdata[k]
                for j, b in enumerate(brow):
                    if b != 0:
                        orow[j] += a * b
        return Mat.from_rows(out, cols=other.cols)

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if self.cols != len(v):
            raise DimensionError("matrix/vector size mismatch")
        out = []
        for row in self._data:
            s = _ZERO
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat.from_rows(
            [tuple(row[j] for row in self._data) for j in range(self.cols)], cols=self.rows
        )

    def trace(self) -> Rat:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def det(self) -> Rat:
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        work = [list(row) for row in self._data]
        det = _ONE
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot = r
                    break
            if pivot is None:
                return _ZERO
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            pv = work[col][col]
            det *= pv
            for r in range(col + 1, n):
                f = work[r][col]
                if f != 0:
                    f = f / pv
                    for j in range(col, n):
                        work[r][j] -= f * work[col][j]
        return det

    def inverse(self) -> "Mat":
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        work = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(self._data)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot = r
                    break
            if pivot is None:
                raise DecompositionError("singular matrix has no inverse")
            work[col], work[pivot] = work[pivot], work[col]
            pv = work[col][col]
            if pv != 1:
                work[col] = [x / pv for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return Mat([row[n:] for row in work])


def vstack(*mats: Mat) -> Mat:
    cols = mats[0].cols
    rows: list[Vector] = []
    for m in mats:
        if m.cols != cols:
            raise DimensionError("vstack column mismatch")
        rows.extend(m.row_list())
    return Mat.from_rows(rows, cols=cols)


def hstack(*mats: Mat) -> Mat:
    rows = mats[0].rows
    for m in mats:
        if m.rows != rows:
            raise DimensionError("hstack row mismatch")
    return Mat.from_rows(
        [sum((m.row(i) for m in mats), ()) for i in range(rows)],
        cols=sum(m.cols for m in mats),
    )


def _rref_rows(rows: list[list[Rat]], cols: int) -> tuple[list[list[Rat]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for rr in range(r, len(rows)):
            if rows[rr][c] != 0:
                pivot = rr
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][c] != 0:
                f = rows[rr][c]
                rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: Mat) -> Mat:
    """Reduced row-echelon form, same shape; zero rows sink to the bottom."""
    rows = [list(r) for r in m.row_list()]
    rows, _ = _rref_rows(rows, m.cols)
    return Mat.from_rows(rows, cols=m.cols)


def rank(m: Mat) -> int:
    rows = [list(r) for r in m.row_list()]
    _, pivots = _rref_rows(rows, m.cols)
    return len(pivots)


class Subspace:
    """A linear subspace of Q^n held in canonical (RREF basis) form.

    Two Subspace values are equal exactly when they are the same subspace;
    the canonical basis makes that a data comparison.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Mat, _canonical: bool = False):
        if basis.cols != ambient_dim:
            raise DimensionError("basis width differs from ambient dimension")
        if not _canonical:
            rows = [list(r) for r in basis.row_list()]
            rows, pivots = _rref_rows(rows, ambient_dim)
            basis = Mat.from_rows(rows[: len(pivots)], cols=ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = basis

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionError("vector length differs from ambient dimension")
        return Subspace(ambient_dim, Mat.from_rows(vs, cols=ambient_dim))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Mat.from_rows([], cols=ambient_dim), _canonical=True)

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Mat.identity(ambient_dim), _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _pivots(self) -> list[int]:
        piv = []
        for row in self.basis.row_list():
            for j, x in enumerate(row):
                if x != 0:
                    piv.append(j)
                    break
        return piv

    def reduce(self, v: Sequence) -> Vector:
        """Residue of v after eliminating against the echelon basis."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise DimensionError("vector length differs from ambient dimension")
        for row, p in zip(self.basis.row_list(), self._pivots()):
            f = w[p]
            if f != 0:
                for j in range(p, self.ambient_dim):
                    if row[j] != 0:
                        w[j] -= f * row[j]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.row_list())

    def coefficients(self, v: Sequence) -> Vector:
        """Coordinates of v in the echelon basis; raises if v is outside."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise DimensionError("vector length differs from ambient dimension")
        coeffs = []
        for row, p in zip(self.basis.row_list(), self._pivots()):
            f = w[p]
            coeffs.append(f)
            if f != 0:
                for j in range(p, self.ambient_dim):
                    if row[j] != 0:
                        w[j] -= f * row[j]
        if not is_zero_vec(tuple(w)):
            raise DecompositionError("vector lies outside the subspace")
        return tuple(coeffs)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspace ambient dimensions differ")
        return Subspace(self.ambient_dim, vstack(self.basis, other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspace ambient dimensions differ")
        da, db = self.dim, other.dim
        if da == 0 or db == 0:
            return Subspace.zero(self.ambient_dim)
        # solve A^T u = B^T v; columns of the stacked system are the two bases
        stacked = hstack(self.basis.transpose(), -other.basis.transpose())
        ker = kernel(stacked)
        pts = []
        for coeffs in ker.basis.row_list():
            u = coeffs[:da]
            point = [_ZERO] * self.ambient_dim
            for cu, row in zip(u, self.basis.row_list()):
                if cu != 0:
                    for j, x in enumerate(row):
                        if x != 0:
                            point[j] += cu * x
            pts.append(tuple(point))
        result = Subspace.from_vectors(self.ambient_dim, pts)
        if __debug__:
            assert result.dim + rank(vstack(self.basis, other.basis)) == da + db
        return result


def kernel(m: Mat) -> Subspace:
    """Null space {v : m v = 0} of an r x c matrix, as a subspace of Q^c."""
    rows = [list(r) for r in m.row_list()]
    rows, pivots = _rref_rows(rows, m.cols)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [_ZERO] * m.cols
        v[j] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][j]
        basis.append(tuple(v))
    return Subspace.from_vectors(m.cols, basis)


class Projector:
    """Projection onto `onto` along `along`, precomputed for repeated use.

    Requires onto + along to be a direct-sum decomposition of the ambient
    space; the projector matrix is cached so each application costs one
    matrix-vector product.
    """

    __slots__ = ("onto", "along", "_mat")

    def __init__(self, onto: Subspace, along: Subspace):
        if onto.ambient_dim != along.ambient_dim:
            raise DimensionError("subspace ambient dimensions differ")
        n = onto.ambient_dim
        if onto.dim + along.dim != n:
            raise DecompositionError("onto + along does not fill the ambient space")
        t = hstack(onto.basis.transpose(), along.basis.transpose())
        try:
            tinv = t.inverse()
        except DecompositionError:
            raise DecompositionError("onto and along overlap; not a direct sum") from None
        # first block of t^-1 extracts the onto-coordinates
        coords = Mat.from_rows(tinv.row_list()[: onto.dim], cols=n)
        self._mat = onto.basis.transpose() * coords
        self.onto = onto
        self.along = along

    def apply(self, v: Sequence) -> Vector:
        return self._mat.apply(vec(v))


def project_along(v: Sequence, onto: Subspace, along: Subspace) -> Vector:
    """Component of v in `onto` for the decomposition ambient = onto + along."""
    return Projector(onto, along).apply(v)


def solve(a: Mat, b: Vector) -> Vector:
    """Solve the square system a x = b exactly; raises if a is singular."""
    if a.rows != a.cols or a.rows != len(b):
        raise DimensionError("solve expects a square system")
    return a.inverse().apply(b)
