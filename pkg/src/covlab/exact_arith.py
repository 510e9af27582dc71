"""Exact rational scalars, vectors and matrices.

Scalars are ``fractions.Fraction`` values (always stored reduced, positive
denominator), vectors are tuples of Fractions, matrices are sequences of
row tuples.  Everything here is pure and exact; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DegenerateInput, ShapeMismatch, SizeLimit

Scalar = Fraction
Vector = tuple[Fraction, ...]

PERMANENT_SIZE_LIMIT = 20  # Ryser walks 2^n subsets


def as_scalar(x) -> Fraction:
    """Coerce an int, string or Fraction to an exact scalar."""
    return x if isinstance(x, Fraction) else Fraction(x)


def as_vector(xs: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in xs)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ShapeMismatch(f"dot of length {len(u)} with length {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise ShapeMismatch(f"difference of length {len(u)} with length {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def primitive_normalize(v: Sequence) -> tuple[int, ...]:
    """Unique primitive integer representative of the ray through ``v``.

    Clears denominators, divides by the gcd and flips sign so the first
    nonzero entry is positive.  Scale-invariant: any nonzero rational
    multiple of ``v`` maps to the same output.
    """
    vec = as_vector(v)
    if all(x == 0 for x in vec):
        raise DegenerateInput("cannot normalize the zero vector")
    scale = lcm(*(x.denominator for x in vec))
    ints = [int(x * scale) for x in vec]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _check_rect(rows: Sequence[Sequence]) -> tuple[int, int]:
    if not rows:
        raise DegenerateInput("empty matrix")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ShapeMismatch("ragged matrix rows")
    return len(rows), ncols


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns the reduced rows (zero rows dropped) and the pivot column
    indices, in order.
    """
    nrows, ncols = _check_rect(rows)
    m = [[as_scalar(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def matrix_rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence]) -> list[Vector]:
    """Basis of the right kernel of the matrix, as exact vectors."""
    _, ncols = _check_rect(rows)
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One exact solution of ``rows @ x = rhs``, or None if inconsistent."""
    nrows, ncols = _check_rect(rows)
    if len(rhs) != nrows:
        raise ShapeMismatch("right-hand side length does not match row count")
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull: rank of the difference matrix."""
    if not points:
        raise DegenerateInput("affine rank of an empty point list")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise ShapeMismatch("points of unequal dimension")
    if len(points) == 1:
        return 0
    base = points[0]
    return matrix_rank([vsub(p, base) for p in points[1:]])


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    nrows, ncols = _check_rect(rows)
    if nrows != ncols:
        raise ShapeMismatch(f"determinant of a {nrows}x{ncols} matrix")
    n = nrows
    m = [[as_scalar(x) for x in r] for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pr is None:
                return Fraction(0)
            m[k], m[pr] = m[pr], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def int_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant specialised to integer entries (exact divisions)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pr is None:
                return 0
            m[k], m[pr] = m[pr], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def permanent(rows: Sequence[Sequence]) -> Fraction:
    """Permanent by Ryser's inclusion-exclusion with Gray-code subset order.

    Per M = (-1)^n * sum over nonempty S of (-1)^{|S|} prod_i sum_{j in S} m_ij.
    The Gray-code walk updates the row sums by one column per step.
    """
    nrows, ncols = _check_rect(rows)
    if nrows != ncols:
        raise ShapeMismatch(f"permanent of a {nrows}x{ncols} matrix")
    n = nrows
    if n > PERMANENT_SIZE_LIMIT:
        raise SizeLimit(f"permanent limited to n <= {PERMANENT_SIZE_LIMIT}, got {n}")
    m = [[as_scalar(x) for x in r] for r in rows]
    cols = [tuple(m[i][j] for i in range(n)) for j in range(n)]
    sums = [Fraction(0)] * n
    total = Fraction(0)
    prev_mask = 0
    for k in range(1, 1 << n):
        mask = k ^ (k >> 1)
        changed = (mask ^ prev_mask).bit_length() - 1
        col = cols[changed]
        if mask & (1 << changed):
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        prev_mask = mask
        prod = Fraction(1)
        for s in sums:
            if s == 0:
                prod = Fraction(0)
                break
            prod *= s
        if prod:
            total += prod if (mask.bit_count() & 1) == 0 else -prod
    return total if n % 2 == 0 else -total


def vandermonde_matrix(values: Sequence) -> list[Vector]:
    """Rows (a_i^0, a_i^1, ..., a_i^{n-1}) for the given values."""
    vals = as_vector(values)
    n = len(vals)
    return [tuple(a ** j for j in range(n)) for a in vals]
