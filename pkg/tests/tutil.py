"""Shared strategies and random builders for the test suite."""

from functools import reduce

import hypothesis.strategies as st

from dyhat import AffineMap, DyadicRational, Hat, Matrix2, Point2, Triangle, weighted_mean
from dyhat.errors import DegenerateTriangle

dyadics = st.builds(DyadicRational, st.integers(-(2**16), 2**16), st.integers(-10, 10))
small_dyadics = st.builds(DyadicRational, st.integers(-64, 64), st.integers(-4, 4))
nonzero_dyadics = dyadics.filter(bool)

points = st.builds(Point2, small_dyadics, small_dyadics)

odd_ints = st.integers(-25, 25).map(lambda k: 2 * k + 1)
odd_positive = st.integers(0, 15).map(lambda k: 2 * k + 1)

# representative hats (i odd, possibly negative or past the fundamental domain)
rep_hats = st.builds(Hat, odd_ints, odd_positive, odd_positive)


def _triangle_or_none(a, b, c):
    try:
        return Triangle((a, b, c))
    except DegenerateTriangle:
        return None


triangles = st.builds(_triangle_or_none, points, points, points).filter(
    lambda t: t is not None
)

_translations = points.map(AffineMap.from_translation)
_shears_x = st.integers(-4, 4).map(
    lambda s: AffineMap.from_linear(Matrix2.of(1, s, 0, 1))
)
_shears_y = st.integers(-4, 4).map(
    lambda s: AffineMap.from_linear(Matrix2.of(1, 0, s, 1))
)
_diags = st.tuples(
    st.sampled_from([1, -1]), st.sampled_from([1, -1]), st.integers(-3, 3)
).map(
    lambda t: AffineMap.from_linear(
        Matrix2.of(t[0], 0, 0, DyadicRational(t[1], t[2]))
    )
)

unit_factors = st.one_of(_translations, _shears_x, _shears_y, _diags)

unit_maps = st.lists(unit_factors, max_size=4).map(
    lambda fs: reduce(lambda f, g: f @ g, fs, AffineMap.identity())
)


def rand_unit_map(rng, max_factors=6):
    """Random unit map: composition of translations, shears and diagonals."""
    f = AffineMap.identity()
    for _ in range(rng.randrange(1, max_factors + 1)):
        kind = rng.randrange(4)
        if kind == 0:
            t = Point2(
                DyadicRational(rng.randrange(-32, 33), rng.randrange(-3, 4)),
                DyadicRational(rng.randrange(-32, 33), rng.randrange(-3, 4)),
            )
            step = AffineMap.from_translation(t)
        elif kind == 1:
            step = AffineMap.from_linear(Matrix2.of(1, rng.randrange(-5, 6), 0, 1))
        elif kind == 2:
            step = AffineMap.from_linear(Matrix2.of(1, 0, rng.randrange(-5, 6), 1))
        else:
            step = AffineMap.from_linear(
                Matrix2.of(
                    rng.choice([1, -1]),
                    0,
                    0,
                    DyadicRational(rng.choice([1, -1]), rng.randrange(-3, 4)),
                )
            )
        f = step @ f
    return f


def rand_interior_point(rng, tri):
    """Random dyadic point strictly inside tri (nested affine combinations)."""
    a, b, c = tri.vertices

    def weight():
        return DyadicRational(rng.randrange(1, 64), -6)

    return weighted_mean(weighted_mean(a, b, weight()), c, weight())
