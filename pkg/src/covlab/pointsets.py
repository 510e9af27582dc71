"""Point-set generators: permutation orbits, grids and zonotope vertex sets.

All coordinates are exact rationals.  Zonotope vertices are found by exact
sign-vector feasibility: a subset S of generators yields a vertex iff some
linear functional is strictly positive on the generators in S and strictly
negative on the rest, decided by Fourier-Motzkin elimination over Q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from . import exact_arith as ea
from .errors import (
    DegenerateCollection,
    DegenerateInput,
    NotAMember,
    ShapeMismatch,
    SizeLimit,
)
from .geometry import Flat, Point, affine_hull, as_point

PERMUTOHEDRON_MAX_N = 8
GRID_MAX_POINTS = 10 ** 6
ZONOTOPE_MAX_RANK = 16
ZONOTOPE_MAX_DIM = 6


@dataclass(frozen=True)
class PointSet:
    """Indexed list of distinct exact points with its precomputed affine hull."""

    points: tuple[Point, ...]
    hull: Flat

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> "PointSet":
        pts = tuple(as_point(p) for p in points)
        if not pts:
            raise DegenerateInput("a point set needs at least one point")
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ShapeMismatch("points of unequal dimension")
        if len(set(pts)) != len(pts):
            raise DegenerateInput("points are not pairwise distinct")
        return cls(pts, affine_hull(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def ambient_dim(self) -> int:
        return len(self.points[0])

    @property
    def hull_dim(self) -> int:
        return self.hull.dim

    def index_of(self, p: Sequence) -> int:
        pt = as_point(p)
        try:
            return self._index[pt]
        except KeyError:
            raise NotAMember(f"{pt} is not a member of the point set") from None

    @cached_property
    def _index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def int_coords(self) -> tuple[tuple[int, ...], ...] | None:
        """Integer view of the coordinates, or None if any is non-integral."""
        if all(x.denominator == 1 for p in self.points for x in p):
            return tuple(tuple(int(x) for x in p) for p in self.points)
        return None

    def to_text(self) -> str:
        lines = [f"# dim={self.ambient_dim} count={len(self.points)}"]
        for p in self.points:
            lines.append(" ".join(f"{x.numerator}/{x.denominator}" for x in p))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PointSet":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise DegenerateInput("point-set text must start with a '# dim=.. count=..' header")
        pts = [tuple(Fraction(tok) for tok in ln.split()) for ln in lines[1:]]
        return cls.from_points(pts)


def permutohedron(n: int) -> PointSet:
    """All n! points whose coordinates are a permutation of 1..n."""
    if not 1 <= n <= PERMUTOHEDRON_MAX_N:
        raise SizeLimit(f"permutohedron supported for 1 <= n <= {PERMUTOHEDRON_MAX_N}, got {n}")
    pts = [tuple(Fraction(v) for v in perm) for perm in itertools.permutations(range(1, n + 1))]
    return PointSet.from_points(pts)


def orbit_points(alphas: Sequence) -> PointSet:
    """All coordinate permutations of the given pairwise-distinct values."""
    vals = ea.as_vector(alphas)
    if len(set(vals)) != len(vals):
        raise DegenerateInput("orbit values must be pairwise distinct")
    if len(vals) > PERMUTOHEDRON_MAX_N:
        raise SizeLimit(f"orbit sets supported up to {PERMUTOHEDRON_MAX_N} values, got {len(vals)}")
    return PointSet.from_points(itertools.permutations(vals))


def orbit_values(x: PointSet) -> tuple[Fraction, ...] | None:
    """Sorted values if x is exactly the full permutation orbit of them."""
    vals = tuple(sorted(x.points[0]))
    n = len(vals)
    if len(set(vals)) != n:
        return None
    if len(x.points) != factorial(n):
        return None
    if any(tuple(sorted(p)) != vals for p in x.points):
        return None
    return vals


def grid(factors: Sequence[Iterable]) -> PointSet:
    """Full Cartesian product of the given value sets."""
    sets = []
    for f in factors:
        vals = tuple(sorted(set(ea.as_vector(f))))
        if not vals:
            raise DegenerateInput("grid factors must be nonempty")
        sets.append(vals)
    if not sets:
        raise DegenerateInput("grid needs at least one factor")
    size = 1
    for vals in sets:
        size *= len(vals)
    if size > GRID_MAX_POINTS:
        raise SizeLimit(f"grid of {size} points exceeds the {GRID_MAX_POINTS} budget")
    return PointSet.from_points(itertools.product(*sets))


def cube(n: int) -> PointSet:
    """Vertex set of the n-dimensional 0/1 cube."""
    return grid([(0, 1)] * n)


# ---------------------------------------------------------------------------
# Zonotopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Zonotope:
    """Minkowski sum of segments [0, v_i] translated by ``base``."""

    generators: tuple[tuple[Fraction, ...], ...]
    base: Point

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def ambient_dim(self) -> int:
        return len(self.base)


def zonotope_rank(generators: Sequence[Sequence], base: Sequence | None = None) -> Zonotope:
    """Validated zonotope from a nondegenerate collection of segment vectors."""
    gens = tuple(ea.as_vector(g) for g in generators)
    if gens:
        dim = len(gens[0])
    elif base is not None:
        dim = len(tuple(base))
    else:
        raise DegenerateInput("zonotope needs generators or an explicit base")
    b = as_point(base) if base is not None else tuple(Fraction(0) for _ in range(dim))
    if len(b) != dim or any(len(g) != dim for g in gens):
        raise ShapeMismatch("generators and base of unequal dimension")
    for g in gens:
        if all(x == 0 for x in g):
            raise DegenerateCollection("zero generator in the collection")
    for u, w in itertools.combinations(gens, 2):
        if ea.matrix_rank([u, w]) <= 1:
            raise DegenerateCollection(f"parallel generators {u} and {w}")
    return Zonotope(gens, b)


def _pos_normalize(row: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a row by a positive rational to primitive integers (sign kept)."""
    scale = lcm(*(x.denominator for x in row)) if row else 1
    ints = [int(x * scale) for x in row]
    g = gcd(*ints) if ints else 1
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def strict_homogeneous_witness(rows: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """Exact witness c with ``row . c > 0`` for every row, or None.

    Fourier-Motzkin elimination on the open homogeneous system; the witness
    is rebuilt by back-substitution with midpoint choices.
    """
    if not rows:
        return None
    nvars = len(rows[0])
    norm = sorted({_pos_normalize(ea.as_vector(r)) for r in rows})
    return _fm_strict(norm, nvars)


def _fm_strict(rows: list[tuple[int, ...]], k: int) -> tuple[Fraction, ...] | None:
    if any(all(x == 0 for x in r) for r in rows):
        return None  # derived 0 > 0
    if k == 0:
        return ()
    pos = [r for r in rows if r[k - 1] > 0]
    neg = [r for r in rows if r[k - 1] < 0]
    rest = [r[: k - 1] for r in rows if r[k - 1] == 0]
    for p in pos:
        for q in neg:
            combo = tuple(p[k - 1] * q[j] - q[k - 1] * p[j] for j in range(k - 1))
            rest.append(_pos_normalize(tuple(Fraction(x) for x in combo)))
    sub = sorted(set(rest))
    w = _fm_strict(sub, k - 1)
    if w is None:
        return None
    lows = [-sum(Fraction(r[j]) * w[j] for j in range(k - 1)) / r[k - 1] for r in pos]
    highs = [-sum(Fraction(r[j]) * w[j] for j in range(k - 1)) / r[k - 1] for r in neg]
    if lows and highs:
        val = (max(lows) + min(highs)) / 2
    elif lows:
        val = max(lows) + 1
    elif highs:
        val = min(highs) - 1
    else:
        val = Fraction(0)
    return w + (val,)


@dataclass(frozen=True)
class VertexCertificate:
    subset: tuple[int, ...]
    point: Point
    witness: tuple[Fraction, ...]


def zonotope_vertex_certificates(z: Zonotope) -> list[VertexCertificate]:
    """One certificate per vertex: generator subset, point, separating functional."""
    if z.rank > ZONOTOPE_MAX_RANK:
        raise SizeLimit(f"zonotope rank limited to {ZONOTOPE_MAX_RANK}, got {z.rank}")
    if z.ambient_dim > ZONOTOPE_MAX_DIM:
        raise SizeLimit(f"zonotope ambient dim limited to {ZONOTOPE_MAX_DIM}, got {z.ambient_dim}")
    r = z.rank
    if r == 0:
        return [VertexCertificate((), z.base, tuple(Fraction(0) for _ in z.base))]
    certs: list[VertexCertificate] = []
    seen: dict[Point, int] = {}
    for mask in range(1 << r):
        rows = [g if mask & (1 << i) else tuple(-x for x in g) for i, g in enumerate(z.generators)]
        wit = strict_homogeneous_witness(rows)
        if wit is None:
            continue
        pt = list(z.base)
        for i in range(r):
            if mask & (1 << i):
                pt = [a + b for a, b in zip(pt, z.generators[i])]
        pt = tuple(pt)
        if pt in seen:  # distinct sign vectors meeting in one point: degenerate only
            continue
        seen[pt] = mask
        subset = tuple(i for i in range(r) if mask & (1 << i))
        certs.append(VertexCertificate(subset, pt, wit))
    return certs


def zonotope_vertices(z: Zonotope) -> PointSet:
    """Exactly the vertex set of the zonotope, in subset-index order."""
    return PointSet.from_points(c.point for c in zonotope_vertex_certificates(z))
