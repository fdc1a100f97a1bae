"""Points, unit affine maps, triangles, and boundary invariants."""

import pytest
from hypothesis import given

from dyhat import (
    AffineMap,
    BoundaryType,
    DyadicRational,
    Matrix2,
    Point2,
    Triangle,
    boundary_type,
    boundary_types_equivalent,
    contains,
    is_valid_boundary_triple,
    midpoint,
    segment_type,
    twice_area,
    weighted_mean,
)
from dyhat.errors import DegenerateTriangle, EqualPoints, NotInvertibleOverD

import tutil

D = DyadicRational


def tri(*coords):
    return Triangle.of(*coords)


def test_point_arithmetic():
    p = Point2.of(1, 2)
    q = Point2.of(3, -1)
    assert p + q == Point2.of(4, 1)
    assert p - q == Point2.of(-2, 3)
    assert (-p) == Point2.of(-1, -2)
    assert p.scaled(D(1, -1)) == Point2(D(1, -1), D(1))


def test_weighted_mean_and_midpoint():
    a = Point2.of(0, 0)
    b = Point2.of(8, 4)
    assert weighted_mean(a, b, D(3, -3)) == Point2(D(3), D(3, -1))
    assert midpoint(a, b) == Point2.of(4, 2)
    assert weighted_mean(a, b, D(0)) == a
    assert weighted_mean(a, b, D(1)) == b


def test_matrix_determinant_and_unit():
    m = Matrix2.of(2, 0, 0, 1)
    assert m.det() == D(2)
    assert m.is_unit()
    assert not Matrix2.of(3, 0, 0, 1).is_unit()
    assert not Matrix2.of(1, 0, 0, 0).is_unit()
    assert Matrix2.of(0, 1, 1, 0).is_unit()


def test_matrix_inverse():
    m = Matrix2.of(1, 0, 0, 2)
    inv = m.invert()
    assert inv == Matrix2(D(1), D(0), D(0), D(1, -1))
    assert m @ inv == Matrix2.identity()
    with pytest.raises(NotInvertibleOverD):
        Matrix2.of(3, 0, 0, 1).invert()
    with pytest.raises(NotInvertibleOverD):
        Matrix2.of(1, 2, 2, 4).invert()


def test_affine_compose_and_invert():
    f = AffineMap(Matrix2.of(0, -1, 1, 0), Point2.of(1, 0))
    g = AffineMap.from_translation(Point2.of(0, 5))
    h = f @ g
    p = Point2.of(2, 3)
    assert h(p) == f(g(p))
    finv = f.invert()
    assert finv(f(p)) == p
    assert (f @ finv)(p) == p


@given(tutil.unit_maps, tutil.points)
def test_unit_maps_invert_exactly(f, p):
    assert f.invert()(f(p)) == p


def test_twice_area():
    assert twice_area(tri((0, 0), (15, 9), (21, 0))) == D(9 * 21)
    t = Triangle(
        (Point2.of(0, 0), Point2(D(1, -1), D(0)), Point2(D(0), D(1, -1)))
    )
    assert twice_area(t) == D(1, -2)


def test_degenerate_triangle_rejected():
    with pytest.raises(DegenerateTriangle):
        tri((0, 0), (1, 1), (2, 2))
    with pytest.raises(DegenerateTriangle):
        tri((0, 0), (0, 0), (1, 0))


def test_segment_type():
    assert segment_type(Point2.of(0, 0), Point2.of(21, 0)) == 21
    assert segment_type(Point2.of(0, 0), Point2.of(15, 9)) == 3
    assert segment_type(Point2.of(0, 0), Point2(D(1, -1), D(0))) == 1
    assert segment_type(Point2.of(0, 0), Point2(D(3, -2), D(9, -2))) == 3
    with pytest.raises(EqualPoints):
        segment_type(Point2.of(1, 1), Point2.of(1, 1))


def test_boundary_type_fixtures():
    assert boundary_type(tri((0, 0), (15, 9), (21, 0))) == (3, 3, 21)
    assert boundary_type(tri((0, 0), (21, 9), (3, 0))) == (3, 9, 3)
    assert boundary_type(tri((0, 0), (1, 3), (5, 0))) == (1, 1, 5)
    assert boundary_type(tri((0, 0), (3, 7), (1, 0))) == (1, 1, 1)
    assert boundary_type(tri((0, 0), (3, 27), (21, 0))) == (3, 9, 21)
    assert boundary_type(tri((0, 0), (39, 27), (21, 0))) == (3, 9, 21)


def test_boundary_type_is_a_named_triple():
    bt = boundary_type(tri((0, 0), (15, 9), (21, 0)))
    assert isinstance(bt, BoundaryType)
    assert (bt.r, bt.s, bt.t) == (3, 3, 21)


def test_valid_boundary_triples():
    assert is_valid_boundary_triple(3, 9, 21)
    assert is_valid_boundary_triple(1, 1, 1)
    assert is_valid_boundary_triple(3, 3, 21)
    assert is_valid_boundary_triple(1, 1, 5)
    assert is_valid_boundary_triple(3, 9, 3)
    # gcds need to agree, nothing more; (1,3,1) has all gcds 1
    assert is_valid_boundary_triple(1, 3, 1)
    assert not is_valid_boundary_triple(3, 3, 5)
    assert not is_valid_boundary_triple(5, 3, 15)


def test_boundary_equivalence_up_to_rotation_and_reversal():
    assert boundary_types_equivalent((3, 3, 21), (3, 21, 3))
    assert boundary_types_equivalent((1, 3, 9), (9, 3, 1))
    assert boundary_types_equivalent((1, 3, 9), (3, 9, 1))
    assert not boundary_types_equivalent((3, 3, 21), (3, 3, 3))
    assert not boundary_types_equivalent((1, 1, 5), (1, 5, 5))


def test_contains():
    t = tri((0, 0), (1, 1), (2, 0))
    assert contains(t, Point2(D(1, -1), D(1, -2)))
    assert contains(t, Point2.of(0, 0))
    assert contains(t, Point2.of(1, 1))
    assert contains(t, Point2(D(1), D(0)))
    assert not contains(t, Point2.of(1, 2))
    assert not contains(t, Point2.of(-1, 0))


@given(tutil.triangles, tutil.points, tutil.points)
def test_contains_closed_under_midpoints(t, p, q):
    if contains(t, p) and contains(t, q):
        assert contains(t, midpoint(p, q))


@given(tutil.triangles, tutil.unit_maps)
def test_twice_area_scales_by_det(t, f):
    assert twice_area(t.transformed(f)) == twice_area(t) * abs(f.det())


@given(tutil.triangles, tutil.unit_maps)
def test_boundary_type_stable_under_unit_maps(t, f):
    # Unit maps permute vertex roles only through our explicit application,
    # so the boundary triple matches slot for slot.
    assert boundary_type(t.transformed(f)) == boundary_type(t)


@given(tutil.triangles)
def test_two_equal_boundary_entries_divide_the_third(t):
    r, s, u = boundary_type(t)
    if r == s:
        assert u % r == 0
    if s == u:
        assert r % s == 0
    if r == u:
        assert s % r == 0
