"""Independent exact isomorphism oracle.

Decides whether an affine map carries one triangle onto another by solving
the vertex correspondence equations over plain rationals and then testing
that the solved map has dyadic entries and determinant +-2**k.  This route
shares no logic with the number-theoretic criteria, so each side checks the
other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .dyadic import DyadicRational
from .errors import InvalidBounds
from .geometry import AffineMap, Matrix2, Point2, Triangle, midpoint


class Correspondence(NamedTuple):
    """Vertex assignment: source vertex k maps to target vertex perm[k]."""

    case: str
    perm: tuple[int, int, int]


#: The six correspondences in a fixed order.  Read off the target slot of
#: each source vertex (A, B, C); e.g. case "b" sends A to slot 2, B to
#: slot 1, C to slot 0.
CORRESPONDENCES = (
    Correspondence("a", (0, 1, 2)),
    Correspondence("b", (2, 1, 0)),
    Correspondence("c", (0, 2, 1)),
    Correspondence("d", (1, 2, 0)),
    Correspondence("e", (2, 0, 1)),
    Correspondence("f", (1, 0, 2)),
)

CASES = tuple(c.case for c in CORRESPONDENCES)


def perm_label(perm: tuple[int, int, int]) -> str:
    """Images of A, B, C as a letter string, e.g. (0, 2, 1) -> "ACB"."""
    return "".join("ABC"[k] for k in perm)


def _fr(d: DyadicRational) -> Fraction:
    if d.exp >= 0:
        return Fraction(d.num << d.exp)
    return Fraction(d.num, 1 << -d.exp)


def _dy(f: Fraction) -> DyadicRational | None:
    den = f.denominator
    if den & (den - 1):
        return None
    return DyadicRational(f.numerator, 1 - den.bit_length())


def solve_correspondence(
    src: Triangle, dst: Triangle, perm: tuple[int, int, int]
) -> AffineMap | None:
    """The unit affine map realizing the correspondence, or None.

    The unique affine map over Q sending vertex k of src to vertex perm[k]
    of dst is solved exactly; it qualifies only if every entry is dyadic
    and the determinant is +-2**k.
    """
    s = src.vertices
    t = tuple(dst.vertices[perm[k]] for k in range(3))

    ax, ay = _fr(s[0].x), _fr(s[0].y)
    u1x, u1y = _fr(s[1].x) - ax, _fr(s[1].y) - ay
    u2x, u2y = _fr(s[2].x) - ax, _fr(s[2].y) - ay
    bx, by = _fr(t[0].x), _fr(t[0].y)
    w1x, w1y = _fr(t[1].x) - bx, _fr(t[1].y) - by
    w2x, w2y = _fr(t[2].x) - bx, _fr(t[2].y) - by

    det = u1x * u2y - u1y * u2x  # nonzero: triangles are nondegenerate
    entries = [
        _dy((w1x * u2y - w2x * u1y) / det),
        _dy((w2x * u1x - w1x * u2x) / det),
        _dy((w1y * u2y - w2y * u1y) / det),
        _dy((w2y * u1x - w1y * u2x) / det),
    ]
    if any(e is None for e in entries):
        return None
    linear = Matrix2(*entries)
    if not linear.is_unit():
        return None
    translation = t[0] - linear.apply(s[0])
    return AffineMap(linear, translation)


def oracle_isomorphic(
    src: Triangle, dst: Triangle
) -> tuple[Correspondence, AffineMap] | None:
    """First correspondence (in the fixed order) realized by a unit map."""
    for corr in CORRESPONDENCES:
        solved = solve_correspondence(src, dst, corr.perm)
        if solved is not None:
            return corr, solved
    return None


def oracle_aut_count(tri: Triangle) -> int:
    """Number of self-correspondences realized by unit maps (1, 2, 3 or 6)."""
    return sum(
        solve_correspondence(tri, tri, corr.perm) is not None
        for corr in CORRESPONDENCES
    )


MAX_CLOSURE_DEPTH = 12


def closure_sample(points: Iterable[Point2], depth: int) -> frozenset[Point2]:
    """Close a point set under pairwise midpoints, depth rounds."""
    if not 0 <= depth <= MAX_CLOSURE_DEPTH:
        raise InvalidBounds(f"depth must be between 0 and {MAX_CLOSURE_DEPTH}")
    current = set(points)
    for _ in range(depth):
        grown = current | {
            midpoint(p, q) for p in current for q in current if p != q
        }
        if grown == current:
            break
        current = grown
    return frozenset(current)
