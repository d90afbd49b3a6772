"""Norms, normalization, polar map and euclidean/ideal classification.

Two magnitudes coexist.  The euclidean norm is sqrt(a^2 + b^2) for a line
and the (signed) weight z for a point; it vanishes identically on ideal
elements.  Those instead carry the positive-definite ideal norm:
sqrt(u^2 + v^2) for an ideal point, the signed coefficient c for an ideal
line c*e0, and the signed magnitude s for a pseudoscalar s*e012.
"""

from __future__ import annotations

import math
from enum import Enum

from .elements import IdealPoint, Line, Point, Pseudoscalar, as_mv
from .errors import ClassificationError, DomainError
from .multivector import DEFAULT_TOL, Multivector, e1, e2, e012


class NormTag(Enum):
    EUCLIDEAN_LINE = "euclidean-line"
    IDEAL_LINE = "ideal-line"
    EUCLIDEAN_POINT = "euclidean-point"
    IDEAL_POINT = "ideal-point"
    PSEUDOSCALAR = "pseudoscalar"


def classify(x, tol: float = DEFAULT_TOL) -> NormTag:
    if isinstance(x, Line):
        return NormTag.IDEAL_LINE if x.is_ideal(tol) else NormTag.EUCLIDEAN_LINE
    if isinstance(x, Point):
        return NormTag.IDEAL_POINT if x.is_ideal(tol) else NormTag.EUCLIDEAN_POINT
    if isinstance(x, IdealPoint):
        return NormTag.IDEAL_POINT
    if isinstance(x, Pseudoscalar):
        return NormTag.PSEUDOSCALAR
    raise TypeError(f"cannot classify {type(x).__name__}")


def is_ideal(x, tol: float = DEFAULT_TOL) -> bool:
    return classify(x, tol) in (NormTag.IDEAL_LINE, NormTag.IDEAL_POINT)


def norm(x, tol: float = DEFAULT_TOL) -> float:
    """Euclidean norm: sqrt(a^2+b^2) for a line, the signed weight z for a point."""
    tag = classify(x, tol)
    if tag is NormTag.EUCLIDEAN_LINE:
        return math.hypot(x.a, x.b)
    if tag is NormTag.EUCLIDEAN_POINT:
        return x.z
    raise ClassificationError(f"{x!r} is ideal; use ideal_norm")


def ideal_norm(x, tol: float = DEFAULT_TOL) -> float:
    """Ideal norm: free-vector length for ideal points, signed weight otherwise."""
    tag = classify(x, tol)
    if tag is NormTag.IDEAL_POINT:
        return math.hypot(x.u, x.v) if isinstance(x, IdealPoint) else math.hypot(x.x, x.y)
    if tag is NormTag.IDEAL_LINE:
        return x.c
    if tag is NormTag.PSEUDOSCALAR:
        return x.s
    raise ClassificationError(f"{x!r} is euclidean; use norm")


def normalize(x, tol: float = DEFAULT_TOL):
    """Scale to unit norm (euclidean) or unit ideal norm (ideal); same type out.

    A normalized euclidean line squares to +1, a normalized euclidean point
    has weight z = 1 and squares to -1.  Ideal lines keep their orientation
    only up to the sign of c, which is divided out.
    """
    tag = classify(x, tol)
    if tag is NormTag.EUCLIDEAN_LINE:
        n = math.hypot(x.a, x.b)
        return Line(x.a / n, x.b / n, x.c / n)
    if tag is NormTag.EUCLIDEAN_POINT:
        return Point(x.x / x.z, x.y / x.z, 1.0)
    if tag is NormTag.IDEAL_LINE:
        if x.c == 0.0:
            raise DomainError("cannot normalize a zero line")
        return Line(x.a / x.c, x.b / x.c, 1.0)
    if tag is NormTag.IDEAL_POINT:
        if isinstance(x, IdealPoint):
            n = math.hypot(x.u, x.v)
            if n == 0.0:
                raise DomainError("cannot normalize a zero ideal point")
            return IdealPoint(x.u / n, x.v / n)
        n = math.hypot(x.x, x.y)
        if n == 0.0:
            raise DomainError("cannot normalize a zero point")
        return Point(x.x / n, x.y / n, x.z / n)
    if tag is NormTag.PSEUDOSCALAR:
        if x.s == 0.0:
            raise DomainError("cannot normalize a zero pseudoscalar")
        return Pseudoscalar(1.0)
    raise TypeError(f"cannot normalize {type(x).__name__}")


def polar(x) -> Multivector:
    """Multiplication by the pseudoscalar: a line maps to its perpendicular
    ideal point, a euclidean point to the ideal line, ideal elements to 0."""
    return e012.gp(as_mv(x))


def ideal_point_of(m: Line, tol: float = DEFAULT_TOL) -> IdealPoint:
    """Direction of a euclidean line: its wedge with the ideal line e0."""
    if m.is_ideal(tol):
        raise ClassificationError(f"{m!r} has no direction point")
    return IdealPoint(m.b, -m.a)


def ideal_inner(u: IdealPoint, v: IdealPoint) -> float:
    """Positive-definite inner product on the ideal line (free-vector dot)."""
    return u.u * v.u + u.v * v.v


def factor_point(p: Point, tol: float = DEFAULT_TOL) -> tuple[Line, Line]:
    """Split a euclidean point of weight +-1 into two orthonormal lines m, n
    with gp(m, n) equal to the point exactly.

    m is the horizontal-ish line through p obtained by dotting e1 into the
    point (always euclidean when p is), and n = gp(m, p) is the line through
    p perpendicular to m; mn recovers p because m squares to 1.
    """
    if p.is_ideal(tol):
        raise ClassificationError(f"{p!r} is ideal; it does not factor into lines")
    if abs(abs(p.z) - 1.0) > tol * max(1.0, abs(p.z)):
        raise DomainError(f"{p!r} must have weight +-1 to factor into orthonormal lines")
    raw = e1.dot(p.mv())
    if raw.grade(1).max_abs() <= tol:
        raw = e2.dot(p.mv())
    m = normalize(Line.from_mv(raw, tol))
    n = Line.from_mv(m.mv().gp(p.mv()), tol)
    return m, n
