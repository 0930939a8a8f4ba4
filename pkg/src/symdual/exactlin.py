"""Exact rational and integer linear algebra.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere.  Matrices are small (a few dozen entries at most), so the
algorithms are the textbook ones: Gauss-Jordan elimination for echelon forms
and kernels, and a row-style Hermite normal form for integer lattices.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence


class LinAlgError(ValueError):
    pass


class NotFullRank(LinAlgError):
    pass


class NonInteger(LinAlgError):
    pass


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string.  Floats are refused."""
    if type(x) is Fraction:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class RatMatrix:
    """Immutable exact rational matrix stored row-major.

    A matrix may have zero rows but a positive column count (a kernel basis
    of an injective map, say), so the shape is kept explicitly.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        self._rows = data
        self._ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "RatMatrix":
        return cls([[0] * n for _ in range(m)], ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RatMatrix":
        return cls([[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), self._ncols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._rows for x in row)

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self._ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(
            [self.col(j) for j in range(self._ncols)], ncols=len(self._rows)
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self._ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return RatMatrix(
            [[sum((a * b for a, b in zip(row, c)), Fraction(0)) for c in cols] for row in self._rows],
            ncols=other.ncols,
        )

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(v) != self._ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * to_fraction(b) for a, b in zip(row, v)), Fraction(0)) for row in self._rows)

    def select_columns(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[row[j] for j in idx] for row in self._rows], ncols=len(idx))

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def rank(self) -> int:
        return len(rref(self)[1])

    def to_lists(self) -> list[list]:
        """Entries as ints where integral, else ``"p/q"`` strings."""
        return [[_plain(x) for x in row] for row in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"RatMatrix({self.to_lists()!r}, ncols={self._ncols})"


def _plain(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def dot(u: Sequence, v: Sequence) -> Fraction:
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    a = [list(r) for r in m.rows()]
    nr, nc = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(a, ncols=nc), pivots


def kernel_basis(m: RatMatrix) -> RatMatrix:
    """Rows form a basis of the right kernel ``{x : m x = 0}``.

    One basis vector per free column, with a 1 in that column.
    """
    red, pivots = rref(m)
    nc = m.ncols
    free = [j for j in range(nc) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(v)
    return RatMatrix(basis, ncols=nc)


def row_space_equal(a: RatMatrix, b: RatMatrix) -> bool:
    if a.ncols != b.ncols:
        return False
    ra, pa = rref(a)
    rb, pb = rref(b)
    return pa == pb and ra.rows()[: len(pa)] == rb.rows()[: len(pb)]


def solve(m: RatMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    aug = RatMatrix([list(row) + [to_fraction(bi)] for row, bi in zip(m.rows(), b)], ncols=m.ncols + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = red[i, m.ncols]
    return tuple(x)


def det(m: RatMatrix) -> Fraction:
    n, nc = m.shape
    if n != nc:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.rows()]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result *= piv
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result


def _int_rows(m: RatMatrix) -> list[list[int]]:
    if not m.is_integer():
        raise NonInteger("matrix has non-integral entries")
    return [[int(x) for x in row] for row in m.rows()]


def hermite_normal_form(m: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Row-style Hermite normal form of an integer matrix.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ m == H``.  ``H`` is in
    row echelon form, pivots positive, entries above a pivot reduced into
    ``[0, pivot)``; zero rows come last.
    """
    a = _int_rows(m)
    nr, nc = m.shape
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]

    def addrow(dst, src, f):
        a[dst] = [x - f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - f * y for x, y in zip(u[dst], u[src])]

    r = 0
    for c in range(nc):
        if r == nr:
            break
        # Euclid down the column until one nonzero entry remains at row r.
        while True:
            nz = [i for i in range(r, nr) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, nr):
                if a[i][c] != 0:
                    addrow(i, r, a[i][c] // a[r][c])
                    if a[i][c] != 0:
                        done = False
            if done:
                break
        if all(a[i][c] == 0 for i in range(r, nr)):
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            addrow(i, r, a[i][c] // a[r][c])
        r += 1
    return RatMatrix(a, ncols=nc), RatMatrix(u, ncols=nr)


def integer_kernel(m: RatMatrix) -> RatMatrix:
    """Basis (canonical HNF rows) of the saturated lattice ``ker(m) ∩ Z^n``."""
    nc = m.ncols
    h, u = hermite_normal_form(m.T)
    zero_rows = [i for i in range(h.nrows) if not any(h.row(i))]
    if not zero_rows:
        return RatMatrix([], ncols=nc)
    k = RatMatrix([u.row(i) for i in zero_rows], ncols=nc)
    hk, _ = hermite_normal_form(k)
    return RatMatrix([row for row in hk.rows() if any(row)], ncols=nc)


def saturate(m: RatMatrix) -> RatMatrix:
    """Integer basis (HNF rows) of ``rowspace(m) ∩ Z^n``."""
    return integer_kernel(integer_kernel(primitive_rows(m)))


def primitive_rows(m: RatMatrix) -> RatMatrix:
    """Scale each row to a primitive integer vector (sign kept)."""
    out = []
    for row in m.rows():
        out.append(primitive_vector(row))
    return RatMatrix(out, ncols=m.ncols)


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    v = [to_fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def gale_complement(m: RatMatrix) -> RatMatrix:
    """Integer ``(n-d) x n`` matrix whose rows generate ``ker(m) ∩ Z^n``.

    ``m`` must be integral of full row rank.  The output is in Hermite
    normal form, so it is canonical.
    """
    if not m.is_integer():
        raise NonInteger("Gale complement needs an integer matrix")
    if m.rank() < m.nrows:
        raise NotFullRank(f"rank {m.rank()} < {m.nrows} rows")
    return integer_kernel(m)


def maximal_minors(m: RatMatrix):
    """Yield ``(column subset, determinant)`` for every d x d minor."""
    d, n = m.shape
    for cols in combinations(range(n), d):
        yield cols, det(m.select_columns(cols))


def is_unimodular(m: RatMatrix) -> bool:
    """True iff every maximal minor lies in {0, 1, -1}."""
    if not m.is_integer():
        raise NonInteger("unimodularity is defined for integer matrices")
    if m.rank() < m.nrows:
        raise NotFullRank(f"rank {m.rank()} < {m.nrows} rows")
    return all(abs(v) <= 1 for _, v in maximal_minors(m))
