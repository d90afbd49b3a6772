"""Interpreted euclidean operations: measurements, bisectors, projections,
perpendiculars and the characteristic three-factor products.

Sign conventions, fixed here and pinned by golden tests:

* the line-to-point distance is the signed incidence defect S(m ^ P); it is
  positive for points to the left of the oriented line, and
  distance(P, m) = -distance(m, P);
* point-to-point and parallel-line distances are nonnegative;
* angles lie in [0, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .elements import IdealPoint, Line, Point, Pseudoscalar
from .errors import ClassificationError, DomainError, OrientationError
from .metric import ideal_inner, normalize
from .multivector import DEFAULT_TOL, Multivector


class MeasurementKind(Enum):
    INTERSECTING_LINES_ANGLE = "intersecting-lines-angle"
    PARALLEL_LINES_DISTANCE = "parallel-lines-distance"
    POINT_POINT_DISTANCE = "point-point-distance"
    IDEAL_POINTS_ANGLE = "ideal-points-angle"
    LINE_POINT_DISTANCE = "line-point-distance"
    LINE_IDEAL_POINT_ANGLE = "line-ideal-point-angle"


@dataclass(frozen=True, slots=True)
class Measurement:
    """A single measured value: radians for angles, length units for distances."""

    value: float
    kind: MeasurementKind

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Orthogonal split of an element; the two parts sum back to the input."""

    parallel_part: Multivector
    orthogonal_part: Multivector

    def total(self) -> Multivector:
        return self.parallel_part + self.orthogonal_part


def _require_euclidean(x, tol, what="argument"):
    if x.is_ideal(tol):
        raise ClassificationError(f"{what} {x!r} must be euclidean")


def _as_ideal_point(x, tol) -> IdealPoint:
    if isinstance(x, IdealPoint):
        return x
    if isinstance(x, Point):
        if not x.is_ideal(tol):
            raise ClassificationError(f"{x!r} is euclidean, not an ideal point")
        return IdealPoint(x.x, x.y)
    raise TypeError(f"expected an ideal point, got {type(x).__name__}")


def distance(x, y, tol: float = DEFAULT_TOL) -> Measurement:
    """Distance between two elements per their kinds.

    point-point: length of the joining line; parallel line-line: the gap
    (nonnegative); line-point: signed incidence defect, antisymmetric in
    the argument order.  Intersecting lines are rejected (use angle).
    """
    if isinstance(x, Point) and isinstance(y, Point):
        if x.is_ideal(tol) or y.is_ideal(tol):
            raise ClassificationError("point distance requires euclidean points")
        p, q = normalize(x, tol), normalize(y, tol)
        j = p.mv().join(q.mv())
        value = math.hypot(j[2], j[3])
        return Measurement(value, MeasurementKind.POINT_POINT_DISTANCE)
    if isinstance(x, Line) and isinstance(y, Line):
        _require_euclidean(x, tol, "line")
        _require_euclidean(y, tol, "line")
        m, n = normalize(x, tol), normalize(y, tol)
        meet = m.mv().outer(n.mv())
        if abs(meet[6]) > tol * max(1.0, meet.max_abs()):
            raise DomainError("lines intersect; the gap is undefined (use angle)")
        value = math.hypot(meet[4], meet[5])
        return Measurement(value, MeasurementKind.PARALLEL_LINES_DISTANCE)
    if isinstance(x, Line) and isinstance(y, Point):
        _require_euclidean(x, tol, "line")
        _require_euclidean(y, tol, "point")
        m, p = normalize(x, tol), normalize(y, tol)
        value = m.mv().outer(p.mv()).pseudo_part()
        return Measurement(value, MeasurementKind.LINE_POINT_DISTANCE)
    if isinstance(x, Point) and isinstance(y, Line):
        flipped = distance(y, x, tol)
        return Measurement(-flipped.value, flipped.kind)
    raise TypeError(f"no distance between {type(x).__name__} and {type(y).__name__}")


def angle(x, y, tol: float = DEFAULT_TOL) -> Measurement:
    """Angle in [0, pi] between two lines, two ideal points, or a line and
    an ideal point (measured against the line's direction)."""
    if isinstance(x, Line) and isinstance(y, Line):
        if x.is_ideal(tol) and y.is_ideal(tol):
            raise DomainError("two ideal lines subtend no angle")
        _require_euclidean(x, tol, "line")
        _require_euclidean(y, tol, "line")
        m, n = normalize(x, tol), normalize(y, tol)
        cos_a = m.mv().dot(n.mv()).scalar_part()
        sin_a = abs(m.mv().outer(n.mv())[6])
        return Measurement(math.atan2(sin_a, cos_a), MeasurementKind.INTERSECTING_LINES_ANGLE)
    x_pointish = isinstance(x, (Point, IdealPoint))
    y_pointish = isinstance(y, (Point, IdealPoint))
    if x_pointish and y_pointish:
        u = normalize(_as_ideal_point(x, tol))
        v = normalize(_as_ideal_point(y, tol))
        c = max(-1.0, min(1.0, ideal_inner(u, v)))
        return Measurement(math.acos(c), MeasurementKind.IDEAL_POINTS_ANGLE)
    if isinstance(x, Line) or isinstance(y, Line):
        m, other = (x, y) if isinstance(x, Line) else (y, x)
        _require_euclidean(m, tol, "line")
        u = normalize(_as_ideal_point(other, tol))
        m = normalize(m, tol)
        ideal_line = m.mv().dot(u.mv())
        c = max(-1.0, min(1.0, ideal_line[1]))
        return Measurement(math.acos(c), MeasurementKind.LINE_IDEAL_POINT_ANGLE)
    raise TypeError(f"no angle between {type(x).__name__} and {type(y).__name__}")


def midpoint(p: Point, q: Point, tol: float = DEFAULT_TOL) -> Point:
    """Point halfway between two euclidean points, returned with weight 1."""
    _require_euclidean(p, tol, "point")
    _require_euclidean(q, tol, "point")
    pn, qn = normalize(p, tol), normalize(q, tol)
    return Point(0.5 * (pn.x + qn.x), 0.5 * (pn.y + qn.y), 1.0)


def midline(m: Line, n: Line, tol: float = DEFAULT_TOL) -> Line:
    """Sum of the normalized lines: the bisector through their common point,
    or the parallel mid-line.  Anti-parallel inputs (whose sum degenerates to
    the ideal line) are rejected; negate one argument to pick the other
    orientation."""
    _require_euclidean(m, tol, "line")
    _require_euclidean(n, tol, "line")
    mn_, nn_ = normalize(m, tol), normalize(n, tol)
    meet = mn_.mv().outer(nn_.mv())
    parallel = abs(meet[6]) <= tol * max(1.0, meet.max_abs())
    if parallel and mn_.mv().dot(nn_.mv()).scalar_part() < 0.0:
        raise OrientationError(
            "anti-parallel lines: their sum is ideal; negate one argument first"
        )
    s = mn_.mv() + nn_.mv()
    return normalize(Line.from_mv(s, tol), tol)


def perp_line_through(m: Line, p: Point, tol: float = DEFAULT_TOL) -> Line:
    """Line through p perpendicular to m, with m's norm and m's orientation
    rotated a quarter turn counterclockwise."""
    _require_euclidean(m, tol, "line")
    _require_euclidean(p, tol, "point")
    return Line.from_mv(m.mv().dot(normalize(p, tol).mv()), tol)


def project(x, onto, tol: float = DEFAULT_TOL) -> Decomposition:
    """Orthogonal decomposition of x with respect to onto.

    Each case multiplies x by onto twice and splits by grade, so the two
    returned parts always sum back to x exactly:

    * line onto line:  ((m.n)n, (m^n)n) - component along n plus the
      perpendicular line through the meet (parallel lines: n plus a multiple
      of the ideal line);
    * line onto point: the parallel line through the point plus an ideal line;
    * point onto line: the closest point on the line plus the perpendicular
      ideal difference vector;
    * point onto point: the base point plus the ideal difference.
    """
    if isinstance(x, (Line, Point)) and x.is_ideal(tol):
        raise ClassificationError(f"cannot project ideal {x!r}")
    if isinstance(onto, (Line, Point)) and onto.is_ideal(tol):
        raise ClassificationError(f"cannot project onto ideal {onto!r}")
    if isinstance(x, Line) and isinstance(onto, Line):
        m, n = normalize(x, tol).mv(), normalize(onto, tol).mv()
        return Decomposition(n.scaled(m.dot(n).scalar_part()), m.outer(n).gp(n))
    if isinstance(x, Line) and isinstance(onto, Point):
        m, p = normalize(x, tol).mv(), normalize(onto, tol).mv()
        return Decomposition(m.dot(p).gp(p).scaled(-1.0), m.outer(p).gp(p).scaled(-1.0))
    if isinstance(x, Point) and isinstance(onto, Line):
        p, m = normalize(x, tol).mv(), normalize(onto, tol).mv()
        return Decomposition(m.gp(m.dot(p)), m.gp(m.outer(p)))
    if isinstance(x, Point) and isinstance(onto, Point):
        p, q = normalize(x, tol).mv(), normalize(onto, tol).mv()
        return Decomposition(
            q.scaled(-q.dot(p).scalar_part()), q.gp(q.commutator(p)).scaled(-1.0)
        )
    raise TypeError(f"cannot project {type(x).__name__} onto {type(onto).__name__}")


def triple_points(a: Point, b: Point, c: Point, tol: float = DEFAULT_TOL) -> Point:
    """Product of three euclidean points of weight 1: the alternating sum
    a - b + c with weight -1 (projectively the same point)."""
    for p in (a, b, c):
        _require_euclidean(p, tol, "point")
    an, bn, cn = (normalize(p, tol) for p in (a, b, c))
    product = an.mv().gp(bn.mv().gp(cn.mv()))
    return Point.from_mv(product, tol)


@dataclass(frozen=True, slots=True)
class TripleLineProduct:
    """Grade components of a three-line product, plus a degeneracy flag."""

    line_part: Line
    pseudo_part: Pseudoscalar
    degenerate: bool


def triple_lines(a: Line, b: Line, c: Line, tol: float = DEFAULT_TOL) -> TripleLineProduct:
    """Product of three normalized euclidean lines, split into its grade-1
    part (the join of two altitude feet of the triangle they bound) and its
    grade-3 part.  Concurrent or parallel triples are flagged, not rejected."""
    for m in (a, b, c):
        _require_euclidean(m, tol, "line")
    an, bn, cn = (normalize(m, tol) for m in (a, b, c))
    product = an.mv().gp(bn.mv().gp(cn.mv()))
    pseudo = Pseudoscalar(product.pseudo_part())
    degenerate = abs(pseudo.s) <= tol * max(1.0, product.max_abs())
    for m, n in ((an, bn), (bn, cn), (cn, an)):
        meet = m.mv().outer(n.mv())
        if abs(meet[6]) <= tol * max(1.0, meet.max_abs()):
            degenerate = True
    return TripleLineProduct(Line.from_mv(product.grade(1), tol), pseudo, degenerate)


def symmetric_line(a: Line, b: Line, c: Line, tol: float = DEFAULT_TOL) -> Line:
    """Sum of the six permutation products abc + acb + ...: a pure line."""
    for m in (a, b, c):
        _require_euclidean(m, tol, "line")
    ma, mb, mc = (normalize(m, tol).mv() for m in (a, b, c))
    total = (
        ma.gp(mb.gp(mc))
        + ma.gp(mc.gp(mb))
        + mb.gp(ma.gp(mc))
        + mb.gp(mc.gp(ma))
        + mc.gp(ma.gp(mb))
        + mc.gp(mb.gp(ma))
    )
    return Line.from_mv(total, tol)
