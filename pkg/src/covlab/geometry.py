"""Exact affine geometry: points, flats, hyperplanes and incidence.

A hyperplane is stored as a jointly primitive integer pair (normal, offset)
with the equation ``normal . x + offset = 0`` and the first nonzero normal
entry positive.  Two modes exist:

* ``ambient`` -- a plain hyperplane of R^n.
* ``induced`` -- the class of hyperplane sections of the sum-hyperplane
  ``sum(x) = s`` (the hull of a permutation orbit).  Functionals equal up to
  scaling and adding multiples of the hull functional collapse to one
  representative: the one whose normal entries sum to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import exact_arith as ea
from .errors import (
    DegenerateInput,
    DegenerateSpan,
    IsAmbientHyperplane,
    ShapeMismatch,
)

Point = tuple[Fraction, ...]

AMBIENT = "ambient"
INDUCED = "induced"


def AMBIENT_SUM(n: int) -> int:
    """Coordinate sum shared by all permutations of 1..n."""
    return comb(n + 1, 2)


def as_point(xs: Iterable) -> Point:
    return ea.as_vector(xs)


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]
    offset: int
    mode: str = AMBIENT

    def __post_init__(self):
        if all(x == 0 for x in self.normal):
            raise DegenerateInput("hyperplane normal is the zero vector")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, p: Sequence) -> Fraction:
        if len(p) != len(self.normal):
            raise ShapeMismatch(
                f"hyperplane in dim {len(self.normal)} evaluated at a point of dim {len(p)}"
            )
        return sum(a * x for a, x in zip(self.normal, p)) + self.offset

    def contains(self, p: Sequence) -> bool:
        return self.evaluate(p) == 0

    def sort_key(self):
        return (self.normal, self.offset)

    def __str__(self):
        terms = []
        for i, a in enumerate(self.normal):
            if a:
                terms.append(f"{'+' if a > 0 and terms else ''}{a}*x{i + 1}")
        c = self.offset
        tail = f"{'+' if c > 0 else ''}{c}" if c else ""
        return "".join(terms) + tail + "=0"


@dataclass(frozen=True)
class Flat:
    """Affine flat: basepoint plus the span of primitive integer directions."""

    basepoint: Point
    directions: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.directions)

    @property
    def ambient_dim(self) -> int:
        return len(self.basepoint)

    def contains(self, p: Sequence) -> bool:
        if len(p) != self.ambient_dim:
            raise ShapeMismatch("point dimension does not match the flat")
        if not self.directions:
            return as_point(p) == self.basepoint
        diff = ea.vsub(as_point(p), self.basepoint)
        cols = [[Fraction(d[i]) for d in self.directions] for i in range(self.ambient_dim)]
        return ea.solve_linear(cols, diff) is not None


def affine_hull(points: Sequence[Sequence]) -> Flat:
    """Flat spanned by the points, with canonical (RREF) direction basis."""
    if not points:
        raise DegenerateInput("affine hull of an empty point list")
    base = as_point(points[0])
    dim = len(base)
    if any(len(p) != dim for p in points):
        raise ShapeMismatch("points of unequal dimension")
    diffs = [ea.vsub(as_point(p), base) for p in points[1:]]
    diffs = [d for d in diffs if any(x != 0 for x in d)]
    if not diffs:
        return Flat(base, ())
    red, _ = ea.rref(diffs)
    return Flat(base, tuple(ea.primitive_normalize(r) for r in red))


def hull_sum_value(flat: Flat) -> Fraction | None:
    """If the flat is the hyperplane ``sum(x) = s``, return s, else None."""
    n = flat.ambient_dim
    if flat.dim != n - 1:
        return None
    if any(sum(d) != 0 for d in flat.directions):
        return None
    return sum(flat.basepoint)


def canonicalize(
    normal: Sequence,
    offset,
    mode: str = AMBIENT,
    hull_sum: Fraction | int | None = None,
) -> Hyperplane:
    """Canonical hyperplane for the rational functional ``normal . x + offset``.

    Ambient mode normalizes (normal | offset) to a jointly primitive integer
    vector with positive leading normal entry.  Induced mode first adds the
    multiple of the hull functional ``sum(x) - hull_sum`` that makes the
    normal entries sum to zero, so equivalent functionals collapse to one
    representative.  ``hull_sum`` defaults to AMBIENT_SUM(n).
    """
    vec = ea.as_vector(normal)
    c = ea.as_scalar(offset)
    if all(x == 0 for x in vec):
        raise DegenerateInput("hyperplane normal is the zero vector")
    if mode == INDUCED:
        n = len(vec)
        s = ea.as_scalar(AMBIENT_SUM(n) if hull_sum is None else hull_sum)
        beta = -sum(vec) / n
        vec = tuple(x + beta for x in vec)
        c = c - beta * s
        if all(x == 0 for x in vec):
            raise IsAmbientHyperplane(
                "normal is parallel to the all-ones vector: this is the hull "
                "hyperplane itself or a parallel translate"
            )
    elif mode != AMBIENT:
        raise ValueError(f"unknown hyperplane mode {mode!r}")
    joint = ea.primitive_normalize(tuple(vec) + (c,))
    return Hyperplane(joint[:-1], joint[-1], mode)


class HullProjection:
    """Affine-isomorphic projection of a flat onto its pivot coordinates.

    Restricting points of the flat to the pivot columns of its direction
    basis is injective, so covering problems inside the flat can be solved
    in the lower-dimensional image and the hyperplanes lifted back.
    """

    def __init__(self, flat: Flat):
        self.flat = flat
        if flat.directions:
            _, piv = ea.rref(flat.directions)
            self.pivots: tuple[int, ...] = tuple(piv)
        else:
            self.pivots = ()
        self.hull_sum = hull_sum_value(flat)

    def project(self, p: Sequence) -> Point:
        return tuple(ea.as_scalar(p[j]) for j in self.pivots)

    def lift(self, normal: Sequence, offset) -> Hyperplane:
        """Hyperplane of R^n whose restriction to the flat has this equation."""
        n = self.flat.ambient_dim
        full = [Fraction(0)] * n
        for w, j in zip(normal, self.pivots):
            full[j] = ea.as_scalar(w)
        if self.hull_sum is not None:
            return canonicalize(full, offset, INDUCED, hull_sum=self.hull_sum)
        return canonicalize(full, offset, AMBIENT)


def hyperplane_through(points: Sequence[Sequence], ambient: Flat) -> Hyperplane:
    """Unique hyperplane of the ambient flat through the given points.

    Needs exactly ``ambient.dim`` points spanning a flat of codimension 1
    inside ``ambient``; raises DegenerateSpan otherwise.  Full-space ambients
    yield ambient-mode hyperplanes, sum-hyperplane ambients induced-mode
    classes, any other proper hull an ambient-mode representative.
    """
    pts = [as_point(p) for p in points]
    d = ambient.dim
    n = ambient.ambient_dim
    if d < 1:
        raise DegenerateInput("ambient flat must have dimension at least 1")
    if len(pts) != d:
        raise DegenerateSpan(
            f"need {d} points to span a hyperplane of a {d}-dimensional flat, got {len(pts)}"
        )
    if any(len(p) != n for p in pts):
        raise ShapeMismatch("point dimension does not match the ambient flat")
    for p in pts:
        if not ambient.contains(p):
            raise DegenerateInput(f"point {p} does not lie in the ambient flat")
    if ea.affine_rank(pts) != d - 1:
        raise DegenerateSpan("points do not span a flat of codimension 1")
    if d == n:
        kernel = ea.nullspace([list(p) + [Fraction(1)] for p in pts])
        vec = kernel[0]
        return canonicalize(vec[:-1], vec[-1], AMBIENT)
    proj = HullProjection(ambient)
    image = [proj.project(p) for p in pts]
    kernel = ea.nullspace([list(q) + [Fraction(1)] for q in image])
    vec = kernel[0]
    return proj.lift(vec[:-1], vec[-1])


def incidence(h: Hyperplane, points) -> tuple[int, ...]:
    """Indices of the points lying on the hyperplane, evaluated exactly.

    Accepts a plain sequence of points or any object with a ``points``
    attribute (a PointSet).
    """
    pts = getattr(points, "points", points)
    return tuple(i for i, p in enumerate(pts) if h.evaluate(p) == 0)
