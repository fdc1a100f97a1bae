"""Exact planar geometry over the dyadic rationals.

Points, 2x2 matrices and affine maps with entries in Z[1/2], plus the
triangle invariants (area, side types, boundary triples) that drive the
classification.  A map is a unit when its determinant is +-2**k; exactly the
units are invertible over the dyadics.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .dyadic import DyadicRational, HALF, ONE, odd_gcd
from .errors import DegenerateTriangle, EqualPoints, NotInvertibleOverD


def _dy(value) -> DyadicRational:
    return value if isinstance(value, DyadicRational) else DyadicRational(value)


@dataclass(frozen=True)
class Point2:
    x: DyadicRational
    y: DyadicRational

    @staticmethod
    def of(x, y) -> "Point2":
        return Point2(_dy(x), _dy(y))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point2":
        return Point2(-self.x, -self.y)

    def scaled(self, r) -> "Point2":
        r = _dy(r)
        return Point2(self.x * r, self.y * r)


ORIGIN = Point2.of(0, 0)


def weighted_mean(a: Point2, b: Point2, r: DyadicRational) -> Point2:
    """The affine combination a*(1-r) + b*r."""
    r = _dy(r)
    return a.scaled(ONE - r) + b.scaled(r)


def midpoint(a: Point2, b: Point2) -> Point2:
    return weighted_mean(a, b, HALF)


def _cross(u: Point2, v: Point2) -> DyadicRational:
    return u.x * v.y - u.y * v.x


@dataclass(frozen=True)
class Matrix2:
    """Row-major 2x2 matrix [[a, b], [c, d]] acting on column vectors."""

    a: DyadicRational
    b: DyadicRational
    c: DyadicRational
    d: DyadicRational

    @staticmethod
    def of(a, b, c, d) -> "Matrix2":
        return Matrix2(_dy(a), _dy(b), _dy(c), _dy(d))

    @staticmethod
    def identity() -> "Matrix2":
        return Matrix2.of(1, 0, 0, 1)

    def det(self) -> DyadicRational:
        return self.a * self.d - self.b * self.c

    def is_unit(self) -> bool:
        """True when det = +-2**k, i.e. the matrix is invertible over Z[1/2]."""
        return abs(self.det().num) == 1

    def apply(self, p: Point2) -> Point2:
        return Point2(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def invert(self) -> "Matrix2":
        det = self.det()
        if abs(det.num) != 1:
            raise NotInvertibleOverD(
                f"determinant {det!r} is not +-2**k, no dyadic inverse"
            )
        return Matrix2(self.d / det, -self.b / det, -self.c / det, self.a / det)


@dataclass(frozen=True)
class AffineMap:
    """p |-> linear @ p + translation."""

    linear: Matrix2
    translation: Point2

    @staticmethod
    def identity() -> "AffineMap":
        return AffineMap(Matrix2.identity(), ORIGIN)

    @staticmethod
    def from_linear(m: Matrix2) -> "AffineMap":
        return AffineMap(m, ORIGIN)

    @staticmethod
    def from_translation(t: Point2) -> "AffineMap":
        return AffineMap(Matrix2.identity(), t)

    def apply(self, p: Point2) -> Point2:
        return self.linear.apply(p) + self.translation

    __call__ = apply

    def __matmul__(self, other: "AffineMap") -> "AffineMap":
        """Composition self after other."""
        return AffineMap(
            self.linear @ other.linear,
            self.linear.apply(other.translation) + self.translation,
        )

    def det(self) -> DyadicRational:
        return self.linear.det()

    def is_unit(self) -> bool:
        return self.linear.is_unit()

    def invert(self) -> "AffineMap":
        inv = self.linear.invert()
        return AffineMap(inv, -inv.apply(self.translation))


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear dyadic vertices; degeneracy is rejected here."""

    vertices: tuple[Point2, Point2, Point2]

    def __post_init__(self):
        a, b, c = self.vertices
        if _cross(b - a, c - a).is_zero:
            raise DegenerateTriangle(f"vertices {a}, {b}, {c} are collinear")

    @staticmethod
    def of(a, b, c) -> "Triangle":
        def pt(p):
            return p if isinstance(p, Point2) else Point2.of(*p)

        return Triangle((pt(a), pt(b), pt(c)))

    def transformed(self, f: AffineMap) -> "Triangle":
        a, b, c = self.vertices
        return Triangle((f.apply(a), f.apply(b), f.apply(c)))


def twice_area(t: Triangle) -> DyadicRational:
    """Absolute cross product of two edge vectors (twice the area)."""
    a, b, c = t.vertices
    return abs(_cross(b - a, c - a))


def segment_type(p: Point2, q: Point2) -> int:
    """Odd positive type of the segment from p to q.

    Clear the common power of two from q - p, then take the odd gcd of the
    resulting integer pair.
    """
    if p == q:
        raise EqualPoints("segment endpoints must differ")
    d = q - p
    e = min(c.exp for c in (d.x, d.y) if c.num != 0)
    a = d.x.num << (d.x.exp - e) if d.x.num else 0
    b = d.y.num << (d.y.exp - e) if d.y.num else 0
    return odd_gcd(a, b)


class BoundaryType(NamedTuple):
    """Side types of the three edges (AB, BC, CA)."""

    r: int
    s: int
    t: int


def boundary_type(tri: Triangle) -> BoundaryType:
    a, b, c = tri.vertices
    return BoundaryType(segment_type(a, b), segment_type(b, c), segment_type(c, a))


def is_valid_boundary_triple(r: int, s: int, t: int) -> bool:
    """Whether the three pairwise gcds agree (realizable boundary triples)."""
    return gcd(r, s) == gcd(s, t) == gcd(r, t)


def boundary_types_equivalent(u: BoundaryType, v: BoundaryType) -> bool:
    """Equality up to cyclic rotation and orientation reversal."""
    r, s, t = u
    forward = {(r, s, t), (s, t, r), (t, r, s)}
    return tuple(v) in forward or tuple(reversed(v)) in forward


def contains(tri: Triangle, p: Point2) -> bool:
    """Whether p lies in the closed triangle, boundary included."""
    a, b, c = tri.vertices
    d1 = _cross(b - a, p - a).sign
    d2 = _cross(c - b, p - b).sign
    d3 = _cross(a - c, p - c).sign
    signs = {d1, d2, d3}
    return not (1 in signs and -1 in signs)
