"""Norm, normalization, polar and classification tests."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from pga2d.elements import IdealPoint, Line, Point, Pseudoscalar
from pga2d.errors import ClassificationError, DomainError
from pga2d.metric import (
    NormTag,
    classify,
    factor_point,
    ideal_inner,
    ideal_norm,
    ideal_point_of,
    is_ideal,
    norm,
    normalize,
    polar,
)
from pga2d.multivector import Multivector, e0, e1, e12, e20, zero


def test_norm_examples():
    assert norm(Line(3, 4, 5)) == 5.0
    assert norm(Point(2, 1, 2)) == 2.0
    assert norm(Point(0, 0, -1)) == -1.0  # signed weight


def test_norm_rejects_ideal():
    with pytest.raises(ClassificationError):
        norm(Line(0, 0, 2))
    with pytest.raises(ClassificationError):
        norm(Point(3, 4, 0))


def test_ideal_norm_examples():
    assert ideal_norm(Point(3, 4, 0)) == 5.0
    assert ideal_norm(IdealPoint(3, 4)) == 5.0
    assert ideal_norm(Line(0, 0, 2)) == 2.0
    assert ideal_norm(Pseudoscalar(-1.5)) == -1.5


def test_ideal_norm_rejects_euclidean():
    with pytest.raises(ClassificationError):
        ideal_norm(Line(1, 0, 0))
    with pytest.raises(ClassificationError):
        ideal_norm(Point(1, 1, 1))


def test_classify():
    assert classify(Line(1, 0, 0)) is NormTag.EUCLIDEAN_LINE
    assert classify(Line(0, 0, 3)) is NormTag.IDEAL_LINE
    assert classify(Point(1, 2, 1)) is NormTag.EUCLIDEAN_POINT
    assert classify(Point(1, 2, 0)) is NormTag.IDEAL_POINT
    assert classify(IdealPoint(1, 0)) is NormTag.IDEAL_POINT
    assert classify(Pseudoscalar(2.0)) is NormTag.PSEUDOSCALAR
    assert is_ideal(Line(0, 0, 2))
    assert not is_ideal(Point(0, 0, 1))


def test_is_ideal_examples():
    assert Point(3, 4, 0).is_ideal()
    assert not Point(0, 0, 1).is_ideal()
    assert Line(0, 0, 2).is_ideal()


def test_normalize_examples():
    ln = normalize(Line(3, 4, 5))
    assert (ln.a, ln.b, ln.c) == (0.6, 0.8, 1.0)
    assert ln.mv().gp(ln.mv()).approx_eq(Multivector((1, 0, 0, 0, 0, 0, 0, 0)), 1e-15)
    pt = normalize(Point(2, 1, 2))
    assert (pt.x, pt.y, pt.z) == (1.0, 0.5, 1.0)


def test_normalized_point_squares_to_minus_one():
    r = gen.rng(10)
    for _ in range(500):
        p = normalize(gen.random_point(r))
        square = p.mv().gp(p.mv())
        assert square.approx_eq(Multivector((-1, 0, 0, 0, 0, 0, 0, 0)), 1e-12)


def test_normalize_random_consistency():
    r = gen.rng(11)
    for _ in range(1000):
        kind = int(r.integers(0, 4))
        if kind == 0:
            ln = normalize(Line(r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(-3, 3)))
            assert abs(norm(ln) - 1.0) <= 1e-12
        elif kind == 1:
            pt = normalize(Point(r.uniform(-3, 3), r.uniform(-3, 3), r.uniform(0.1, 3)))
            assert pt.z == 1.0
        elif kind == 2:
            ip = normalize(IdealPoint(r.uniform(-3, 3), r.uniform(-3, 3)))
            assert abs(ideal_norm(ip) - 1.0) <= 1e-12
        else:
            il = normalize(Line(0.0, 0.0, r.uniform(0.1, 3.0) * (1 if r.uniform() < 0.5 else -1)))
            assert abs(ideal_norm(il) - 1.0) <= 1e-12


def test_normalize_zero_is_domain_error():
    with pytest.raises(DomainError):
        Line(0, 0, 0)
    with pytest.raises(DomainError):
        normalize(Pseudoscalar(0.0))


def test_polar_examples():
    assert polar(e1) == e20
    assert polar(e12) == -e0
    assert polar(e0) == zero
    assert polar(Line(1, 0, 0)) == e20
    assert polar(Point(0, 0, 1)) == -e0


def test_polar_of_ideal_elements_is_zero():
    assert polar(IdealPoint(2, 3)) == zero
    assert polar(Line(0, 0, 5)) == zero


def test_polar_preserves_normalization():
    r = gen.rng(12)
    for _ in range(300):
        a = normalize(gen.random_line(r))
        perp = polar(a)
        assert abs(math.hypot(perp[4], perp[5]) - 1.0) <= 1e-12
        assert abs(perp[6]) <= 1e-15


def test_ideal_point_of_examples():
    # direction of the line x = 0 points downward, of y = 0 rightward
    assert ideal_point_of(Line(1, 0, 0)) == IdealPoint(0, -1)
    assert ideal_point_of(Line(0, 1, 0)) == IdealPoint(1, 0)
    with pytest.raises(ClassificationError):
        ideal_point_of(Line(0, 0, 1))


def test_ideal_point_of_matches_wedge_with_ideal_line():
    r = gen.rng(13)
    for _ in range(200):
        m = gen.random_line(r)
        direct = ideal_point_of(m)
        wedge = m.mv().outer(e0)
        assert wedge.approx_eq(direct.mv(), 1e-15)


def test_ideal_point_of_normalized_line_is_unit():
    r = gen.rng(14)
    for _ in range(300):
        m = normalize(gen.random_line(r))
        assert abs(ideal_norm(ideal_point_of(m)) - 1.0) <= 1e-12


def test_ideal_norm_is_independent_of_reference_point():
    r = gen.rng(15)
    for _ in range(20):
        p = gen.random_ideal_point(r)
        expected = ideal_norm(p)
        for _ in range(100):
            q = normalize(gen.random_point(r))
            joined = p.as_point().mv().join(q.mv())
            assert abs(math.hypot(joined[2], joined[3]) - expected) <= 1e-9


def test_scalar_part_of_euclidean_times_ideal_bivector_vanishes():
    r = gen.rng(16)
    for _ in range(500):
        p = gen.random_point(r).mv()
        u = gen.random_ideal_point(r).mv()
        assert p.gp(u).scalar_part() == 0.0  # exactly, by the table structure


def test_unit_weight_bivectors_share_their_ideal_wedge():
    r = gen.rng(17)
    for _ in range(500):
        p = gen.random_point(r).mv()
        q = gen.random_point(r).mv()
        p = p.scaled(1.0 / abs(p[6]))
        q = q.scaled(1.0 / abs(q[6]))
        # both now square to -1 exactly
        wp = e0.outer(p)
        wq = e0.outer(q)
        assert wp == wq or wp == -wq


def test_factor_point_reconstructs():
    r = gen.rng(18)
    for _ in range(500):
        p = normalize(gen.random_point(r))
        if r.uniform() < 0.5:
            p = Point(-p.x, -p.y, -p.z)  # weight -1 branch
        m, n = factor_point(p)
        assert abs(norm(m) - 1.0) <= 1e-12
        assert abs(norm(n) - 1.0) <= 1e-12
        assert m.mv().dot(n.mv()).scalar_part() == pytest.approx(0.0, abs=1e-12)
        assert m.mv().gp(n.mv()).approx_eq(p.mv(), 1e-12)


def test_factor_point_rejects_ideal_and_unnormalized():
    with pytest.raises(ClassificationError):
        factor_point(Point(1, 0, 0))
    with pytest.raises(DomainError):
        factor_point(Point(1, 0, 2))


def test_ideal_inner_is_the_plane_dot_product():
    assert ideal_inner(IdealPoint(1, 2), IdealPoint(3, 4)) == 11.0


coord = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(coord, coord, coord)
def test_normalized_euclidean_line_squares_to_one(a, b, c):
    line = Line(a, b, c) if (a, b, c) != (0.0, 0.0, 0.0) else Line(1.0, 0.0, 0.0)
    if line.is_ideal(1e-6):
        return
    if math.hypot(a, b) < 1e-150:
        return  # subnormal normals carry too few bits to normalize accurately
    n = normalize(line)
    square = n.mv().gp(n.mv())
    assert abs(square.scalar_part() - 1.0) <= 1e-9
    assert (square - square.grade(0)).max_abs() <= 1e-9


@settings(max_examples=200, deadline=None)
@given(coord, coord, st.floats(min_value=0.01, max_value=100.0))
def test_normalize_point_is_idempotent(x, y, z):
    p = normalize(Point(x, y, z))
    assert p.z == 1.0
    again = normalize(p)
    assert (again.x, again.y, again.z) == (p.x, p.y, p.z)
