"""Hats: normal forms for nondegenerate dyadic triangles.

The hat with parameters (i, j, m) is the triangle with vertices (0, 0),
(i, j), (m, 0); here j and m are odd positive and i is any integer.  Every
dyadic triangle with a chosen vertex role assignment is isomorphic, by a
unit affine map, to exactly one representative hat with i odd in
{1, 3, ..., 2j-1}; that triple encodes the pointed isomorphism class, and
the set of triples over all six role assignments encodes the full class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple

from .dyadic import DyadicRational, dyadic_mod_odd, egcd
from .errors import InvalidHat
from .geometry import AffineMap, Matrix2, Point2, Triangle


def _check_odd_positive(value: int, name: str) -> None:
    if value <= 0 or value % 2 == 0:
        raise InvalidHat(f"{name} must be an odd positive integer, got {value}")


@dataclass(frozen=True)
class Hat:
    """Triangle (0,0), (i,j), (m,0) with odd positive j, m; i unrestricted."""

    i: int
    j: int
    m: int

    def __post_init__(self):
        _check_odd_positive(self.j, "j")
        _check_odd_positive(self.m, "m")

    @property
    def is_representative(self) -> bool:
        return self.i % 2 != 0

    def triangle(self) -> Triangle:
        return Triangle.of((0, 0), (self.i, self.j), (self.m, 0))


@dataclass(frozen=True)
class EncodingTriple:
    """Pointed class label: odd i in {1, ..., 2j-1} with odd positive j, m."""

    i: int
    j: int
    m: int

    def __post_init__(self):
        _check_odd_positive(self.j, "j")
        _check_odd_positive(self.m, "m")
        if self.i % 2 == 0 or not 1 <= self.i <= 2 * self.j - 1:
            raise InvalidHat(
                f"i must be odd in 1..{2 * self.j - 1}, got {self.i}"
            )

    def hat(self) -> Hat:
        return Hat(self.i, self.j, self.m)

    def __lt__(self, other: "EncodingTriple") -> bool:
        # canonical order: lexicographic on (j, m, i)
        return (self.j, self.m, self.i) < (other.j, other.m, other.i)


def kappa(h: Hat) -> Hat:
    """The involution (i, j, m) -> (m - i, j, m); flips the parity of i."""
    return Hat(h.m - h.i, h.j, h.m)


def pointed_canonical(h: Hat) -> EncodingTriple:
    """Reduce i to the odd representative of its pointed class in 1..2j-1.

    Odd i moves by multiples of 2j; even i passes through i + j first.
    """
    two_j = 2 * h.j
    if h.i % 2:
        return EncodingTriple(h.i % two_j, h.j, h.m)
    return EncodingTriple((h.i + h.j) % two_j, h.j, h.m)


class Normalization(NamedTuple):
    hat: Hat
    witness: AffineMap


IDENTITY_ROLES = (0, 1, 2)


def normalize(tri: Triangle, roles: tuple[int, int, int] = IDENTITY_ROLES) -> Normalization:
    """Send a triangle to its representative hat for the given vertex roles.

    roles picks which vertex plays which part: vertices[roles[0]] is pinned
    at the origin, vertices[roles[1]] becomes the apex (i, j) and
    vertices[roles[2]] lands on (m, 0).  The returned witness is the unit
    affine map realizing that, composed from a translation, an integer
    Bezout matrix, power-of-two rescalings, an optional reflection and a
    final dyadic shear.
    """
    if sorted(roles) != [0, 1, 2]:
        raise ValueError("roles must be a permutation of (0, 1, 2)")
    x, y, z = (tri.vertices[k] for k in roles)

    witness = AffineMap.from_translation(-x)
    v = z - x

    # rotate/scale the base: v goes to (m, 0) with m its odd gcd
    alpha = min(c.exp for c in (v.x, v.y) if c.num != 0)
    a = (v.x.num << (v.x.exp - alpha)) if v.x.num else 0
    b = (v.y.num << (v.y.exp - alpha)) if v.y.num else 0
    m, bez_x, bez_y = egcd(a, b)
    base_fix = Matrix2(
        DyadicRational(bez_x, -alpha),
        DyadicRational(bez_y, -alpha),
        DyadicRational(-(b // m), -alpha),
        DyadicRational(a // m, -alpha),
    )
    witness = AffineMap.from_linear(base_fix) @ witness

    # the apex must end up above the base line
    apex = witness.apply(y)
    if apex.y.num < 0:
        witness = AffineMap.from_linear(Matrix2.of(1, 0, 0, -1)) @ witness
        apex = Point2(apex.x, -apex.y)

    # rescale the height to an odd integer j; (m, 0) is fixed
    if apex.y.exp != 0:
        scale = Matrix2.of(1, 0, 0, DyadicRational(1, -apex.y.exp))
        witness = AffineMap.from_linear(scale) @ witness
        apex = Point2(apex.x, DyadicRational(apex.y.num))
    j = apex.y.num

    # shear i0 onto the odd representative of its class mod 2j
    i0 = apex.x
    r = dyadic_mod_odd(i0, j).value
    i = r if r % 2 else r + j
    shear_c = (DyadicRational(i) - i0) / DyadicRational(j)
    witness = AffineMap.from_linear(Matrix2.of(1, shear_c, 0, 1)) @ witness

    return Normalization(Hat(i, j, m), witness)


def all_encoding_triples(tri: Triangle) -> frozenset[EncodingTriple]:
    """Encoding triples over all six vertex role assignments (1 to 6 values)."""
    return frozenset(
        pointed_canonical(normalize(tri, roles).hat)
        for roles in permutations((0, 1, 2))
    )


def canonical_form(tri: Triangle) -> EncodingTriple:
    """The least encoding triple in the canonical (j, m, i) order."""
    return min(all_encoding_triples(tri))
