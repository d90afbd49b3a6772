"""Reflections, rotors, exponential/logarithm maps, glide reflections and the
point-line transport construction.

A motor (scalar plus bivector) acts through the two-sided sandwich
g x reverse(g) and realizes a direct isometry: a rotation about its bivector
axis point or, when the bivector is ideal, a translation.  An odd versor
(line plus pseudoscalar) realizes a reflection or glide reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elements import IdealPoint, Line, Point, as_mv
from .errors import ClassificationError, ConstructionError, DomainError, IncidenceError
from .metric import normalize
from .multivector import DEFAULT_TOL, Multivector


@dataclass(frozen=True, slots=True)
class Motor:
    """Even-subalgebra element s + bx*e20 + by*e01 + bz*e12."""

    s: float
    bx: float
    by: float
    bz: float

    def __post_init__(self):
        for name in ("s", "bx", "by", "bz"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not all(math.isfinite(v) for v in (self.s, self.bx, self.by, self.bz)):
            raise DomainError("non-finite motor components")

    def mv(self) -> Multivector:
        return Multivector((self.s, 0.0, 0.0, 0.0, self.bx, self.by, self.bz, 0.0))

    @classmethod
    def from_mv(cls, u: Multivector, tol: float = DEFAULT_TOL) -> "Motor":
        residue = (u - u.grade(0) - u.grade(2)).max_abs()
        if residue > tol * max(1.0, u.max_abs()):
            raise DomainError(f"not an even element: {u!r}")
        return cls(u[0], u[4], u[5], u[6])

    def weight(self) -> float:
        """Square root of g * reverse(g); 1 for a normalized motor."""
        return math.hypot(self.s, self.bz)

    def normalized(self, tol: float = DEFAULT_TOL) -> "Motor":
        w = self.weight()
        if w <= tol:
            raise DomainError(f"{self!r} is null and cannot be normalized")
        return Motor(self.s / w, self.bx / w, self.by / w, self.bz / w)

    def __repr__(self) -> str:
        return f"Motor({self.s:g}, {self.bx:g}, {self.by:g}, {self.bz:g})"


IDENTITY_MOTOR = Motor(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class OddVersor:
    """Grade-1 plus grade-3 element: a line together with a pseudoscalar weight."""

    line: Line
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "lam", float(self.lam))
        if not math.isfinite(self.lam):
            raise DomainError("non-finite versor pseudoscalar part")

    def mv(self) -> Multivector:
        m = self.line
        return Multivector((0.0, m.c, m.a, m.b, 0.0, 0.0, 0.0, self.lam))

    @classmethod
    def from_mv(cls, u: Multivector, tol: float = DEFAULT_TOL) -> "OddVersor":
        residue = (u - u.grade(1) - u.grade(3)).max_abs()
        if residue > tol * max(1.0, u.max_abs()):
            raise DomainError(f"not an odd element: {u!r}")
        return cls(Line(u[2], u[3], u[1]), u[7])

    def normalized(self, tol: float = DEFAULT_TOL) -> "OddVersor":
        n = math.hypot(self.line.a, self.line.b)
        if n <= tol * max(abs(self.line.a), abs(self.line.b), abs(self.line.c), abs(self.lam)):
            raise DomainError("versor with ideal line part cannot be normalized")
        return OddVersor(Line(self.line.a / n, self.line.b / n, self.line.c / n), self.lam / n)


@dataclass(frozen=True, slots=True)
class GlideDecomposition:
    """Axis and signed translation distance of a glide reflection.

    Recomposition is exact: axis + (translation_distance/2)*e012 equals the
    normalized versor.  Note that the euclidean displacement realized on
    points runs opposite the axis direction scaled by translation_distance
    (the odd sandwich flips the weight of every point image).
    """

    axis: Line
    translation_distance: float


def _versor_mv(v) -> Multivector:
    if isinstance(v, (Motor, OddVersor)):
        return v.mv()
    if isinstance(v, Line):
        return v.mv()
    if isinstance(v, Multivector):
        return v
    raise TypeError(f"cannot use {type(v).__name__} as a versor")


def _typed_like(x, result: Multivector, tol: float):
    if isinstance(x, Multivector):
        return result
    if isinstance(x, Line):
        return Line.from_mv(result, tol)
    if isinstance(x, Point):
        return Point.from_mv(result, tol)
    if isinstance(x, IdealPoint):
        return IdealPoint(result[4], result[5])
    return result


def sandwich(v, x, tol: float = DEFAULT_TOL):
    """Two-sided action v x reverse(v); returns the same kind of element as x."""
    vm = _versor_mv(v)
    result = vm.gp(as_mv(x).gp(vm.reverse()))
    return _typed_like(x, result, tol)


def reflect(a: Line, x, tol: float = DEFAULT_TOL):
    """Reflection in the euclidean line a: the sandwich a x a (no reversal,
    since a line is its own reverse)."""
    if a.is_ideal(tol):
        raise DomainError("the ideal line is not a mirror")
    am = normalize(a, tol).mv()
    result = am.gp(as_mv(x).gp(am))
    return _typed_like(x, result, tol)


def rotor_from_lines(a: Line, b: Line, tol: float = DEFAULT_TOL) -> Motor:
    """Motor of the composition reflect-in-a-then-reflect-in-b, i.e. gp(b, a).

    Intersecting mirrors give the rotation about their common point by twice
    their angle; parallel mirrors a translation by twice their gap.
    """
    if a.is_ideal(tol) or b.is_ideal(tol):
        raise DomainError("mirrors must be euclidean lines")
    an, bn = normalize(a, tol), normalize(b, tol)
    return Motor.from_mv(bn.mv().gp(an.mv()), tol)


def _sinc(t: float) -> float:
    if abs(t) < 1e-4:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


def _inv_sinc(t: float) -> float:
    if abs(t) < 1e-4:
        t2 = t * t
        return 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0
    return t / math.sin(t)


def exp_bivector(b, tol: float = DEFAULT_TOL) -> Motor:
    """Closed-form exponential of a pure bivector.

    For a euclidean bivector t*P with P normalized this is cos t + sin t * P;
    for an ideal bivector V (which squares to zero) the series truncates to
    1 + V.  Both branches are covered by cos(z) + sinc(z) * b with z the
    e12 coefficient.
    """
    bm = as_mv(b)
    residue = (bm - bm.grade(2)).max_abs()
    if residue > tol * max(1.0, bm.max_abs()):
        raise DomainError(f"exponential argument must be a pure bivector, got {bm!r}")
    t = bm[6]
    k = _sinc(t)
    return Motor(math.cos(t), k * bm[4], k * bm[5], k * t)


def log_motor(g: Motor, tol: float = DEFAULT_TOL) -> Multivector:
    """Principal logarithm of a normalized motor, a pure bivector.

    Motors with negative scalar part are negated first (g and -g act
    identically), which makes the result single-valued with sandwich
    rotation magnitude in [0, pi].
    """
    gn = g.normalized(tol)
    if gn.s < 0.0:
        gn = Motor(-gn.s, -gn.bx, -gn.by, -gn.bz)
    t = math.atan2(gn.bz, gn.s)
    f = _inv_sinc(t)
    return Multivector((0.0, 0.0, 0.0, 0.0, f * gn.bx, f * gn.by, f * gn.bz, 0.0))


def interpolate(g: Motor, t: float, tol: float = DEFAULT_TOL) -> Motor:
    """Motor path exp(t * log g): identity at t = 0, +-g at t = 1."""
    return exp_bivector(log_motor(g, tol).scaled(t), tol)


def rotator(p: Point, alpha: float, tol: float = DEFAULT_TOL) -> Motor:
    """Motor whose sandwich rotates by alpha about the euclidean point p.

    Positive alpha turns +x toward -y about a weight-positive point (the
    half-angle exponential of this basis is clockwise in the usual drawing
    orientation); golden tests pin the convention.
    """
    if p.is_ideal(tol):
        raise ClassificationError(f"rotation center {p!r} must be euclidean")
    return exp_bivector(normalize(p, tol).mv().scaled(alpha / 2.0), tol)


def translator(v: IdealPoint, d: float, tol: float = DEFAULT_TOL) -> Motor:
    """Motor whose sandwich translates by distance d perpendicular (CCW) to v."""
    vn = normalize(v, tol)
    return exp_bivector(vn.mv().scaled(d / 2.0), tol)


def translator_by(dx: float, dy: float) -> Motor:
    """Motor translating every point by the vector (dx, dy)."""
    return Motor(1.0, 0.5 * dy, -0.5 * dx, 0.0)


def glide_decompose(v: OddVersor, tol: float = DEFAULT_TOL) -> GlideDecomposition:
    """Split an odd versor m + lam*e012 into its reflection axis and the
    glide translation distance 2*lam (measured against the axis direction)."""
    if v.line.is_ideal(tol):
        raise DomainError("versor with ideal line part is not a glide reflection")
    n = math.hypot(v.line.a, v.line.b)
    axis = Line(v.line.a / n, v.line.b / n, v.line.c / n)
    return GlideDecomposition(axis, 2.0 * v.lam / n)


def glide_recompose(d: GlideDecomposition) -> OddVersor:
    return OddVersor(d.axis, 0.5 * d.translation_distance)


def factor_motor(g: Motor, tol: float = DEFAULT_TOL) -> tuple[Line, Line]:
    """Two normalized mirror lines (p, q) with rotor_from_lines(p, q) equal to
    the normalized motor: q is gp(g, p) for a line p through the axis."""
    gn = g.normalized(tol)
    if abs(gn.bz) > tol:
        center = Point(gn.bx / gn.bz, gn.by / gn.bz, 1.0)
        p = Line(0.0, 1.0, -center.y / center.z)
    else:
        w = math.hypot(gn.bx, gn.by)
        if w <= tol:
            p = Line(0.0, 1.0, 0.0)
        else:
            p = Line(-gn.by / w, gn.bx / w, 0.0)
    q = Line.from_mv(gn.mv().gp(p.mv()), tol)
    return p, q


def _lines_match(m: Line, n: Line, tol: float) -> bool:
    """Projective equality with positive scale, for normalized euclidean lines."""
    return (
        abs(m.a - n.a) <= tol and abs(m.b - n.b) <= tol and abs(m.c - n.c) <= tol * max(
            1.0, abs(m.c), abs(n.c)
        )
    )


def _points_match(p: Point, q: Point, tol: float) -> bool:
    scale = max(1.0, abs(p.x), abs(p.y), abs(q.x), abs(q.y))
    return abs(p.x - q.x) <= tol * scale and abs(p.y - q.y) <= tol * scale


def _transports(g: Motor, a: Point, m: Line, a2: Point, m2: Line, tol: float) -> bool:
    img_pt = normalize(sandwich(g, a, tol), tol)
    img_ln = normalize(sandwich(g, m, tol), tol)
    return _points_match(img_pt, a2, tol) and _lines_match(img_ln, m2, tol)


def _rotor_fixing_point(a: Point, m: Line, m2: Line, tol: float) -> Motor:
    """Motor of the rotation about a carrying the oriented line m to m2;
    both lines must pass through a."""
    if _lines_match(m, m2, tol):
        return IDENTITY_MOTOR
    total = m.mv() + m2.mv()
    if math.hypot(total[2], total[3]) > tol * max(1.0, total.max_abs()):
        bisector = normalize(Line.from_mv(total, tol), tol)
        return Motor.from_mv(bisector.mv().gp(m.mv()), tol)
    # anti-parallel mirror pair: half turn about the fixed point
    return Motor.from_mv(a.mv(), tol)


def solve_point_line_transport(
    a: Point, m: Line, a2: Point, m2: Line, tol: float = DEFAULT_TOL
) -> Motor:
    """The unique direct isometry g with sandwich a -> a2 and m -> m2.

    Built from the classical construction: join the points, take the
    perpendicular bisector r through their midpoint, intersect it with the
    oriented line difference c = m - m2 to find the fixed point, and compose
    r with the line from a to that fixed point.  An ideal intersection makes
    the same formulas produce a translator.  Degenerate configurations
    (coincident points, identical lines, r parallel to c) fall back to an
    explicit translate-then-rotate composition; the postcondition is checked
    either way and failures are rejected.
    """
    for x, name in ((a, "a"), (a2, "a2")):
        if x.is_ideal(tol):
            raise ClassificationError(f"point {name} must be euclidean")
    for x, name in ((m, "m"), (m2, "m2")):
        if x.is_ideal(tol):
            raise ClassificationError(f"line {name} must be euclidean")
    an, a2n = normalize(a, tol), normalize(a2, tol)
    mn, m2n = normalize(m, tol), normalize(m2, tol)
    check_tol = max(tol, 1e-9)
    for pt, ln, label in ((an, mn, "a on m"), ((a2n), m2n, "a2 on m2")):
        defect = ln.mv().outer(pt.mv()).pseudo_part()
        if abs(defect) > check_tol * max(1.0, abs(pt.x), abs(pt.y)):
            raise IncidenceError(f"required incidence {label} fails (defect {defect:g})")

    if _points_match(an, a2n, tol) and _lines_match(mn, m2n, tol):
        return IDENTITY_MOTOR

    g = _transport_via_construction(an, mn, a2n, m2n, tol)
    if g is not None and _transports(g, an, mn, a2n, m2n, check_tol):
        return g
    g = _transport_via_composition(an, mn, a2n, m2n, tol)
    if _transports(g, an, mn, a2n, m2n, check_tol):
        return g
    raise ConstructionError("no direct isometry transports the given pairs")


def _transport_via_construction(
    an: Point, mn: Line, a2n: Point, m2n: Line, tol: float
) -> Motor | None:
    joining = an.mv().join(a2n.mv())
    scale = max(1.0, an.mv().max_abs(), a2n.mv().max_abs())
    if joining.max_abs() <= tol * scale:
        return None  # coincident points: rotation about them, handled by fallback
    c = mn.mv() - m2n.mv()
    if c.max_abs() <= tol:
        return None  # identical oriented lines: pure slide along m
    mid = an.mv() + a2n.mv()
    r_mv = mid.dot(joining)
    if math.hypot(r_mv[2], r_mv[3]) <= tol * max(1.0, r_mv.max_abs()):
        return None
    r = normalize(Line.from_mv(r_mv, tol), tol)
    center = r.mv().outer(c)
    if center.max_abs() <= tol * max(1.0, c.max_abs()):
        return None  # perpendicular bisector coincides with the line bisector
    s_mv = an.mv().join(center)
    if math.hypot(s_mv[2], s_mv[3]) <= tol * max(1.0, s_mv.max_abs()):
        return None
    s = normalize(Line.from_mv(s_mv, tol), tol)
    return Motor.from_mv(r.mv().gp(s.mv()), tol)


def _transport_via_composition(
    an: Point, mn: Line, a2n: Point, m2n: Line, tol: float
) -> Motor:
    if _points_match(an, a2n, tol):
        shift = IDENTITY_MOTOR
        m1 = mn
    else:
        shift = translator_by(a2n.x - an.x, a2n.y - an.y)
        m1 = normalize(sandwich(shift, mn, tol), tol)
    turn = _rotor_fixing_point(a2n, m1, m2n, tol)
    return Motor.from_mv(turn.mv().gp(shift.mv()), tol).normalized(tol)
