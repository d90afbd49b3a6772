"""Typed views of homogeneous elements: lines, points, ideal points, pseudoscalars.

A line [a, b, c] is the 1-vector a*e1 + b*e2 + c*e0 (the locus ax + by + c = 0,
third coordinate homogeneous); a point (x, y, z) is the 2-vector
x*e20 + y*e01 + z*e12.  Classification into euclidean/ideal uses a tolerance
relative to the element's largest coefficient, since homogeneous coordinates
carry no absolute scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .multivector import DEFAULT_TOL, Multivector
from .multivector import zero as _zero_mv


def _view_scale(*coeffs: float) -> float:
    return max(abs(c) for c in coeffs)


@dataclass(frozen=True, slots=True)
class Line:
    """Oriented line with tuple convention [a, b, c]: the locus ax + by + c = 0."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            raise DomainError(f"non-finite line coefficients [{self.a}, {self.b}, {self.c}]")
        if self.a == 0.0 and self.b == 0.0 and self.c == 0.0:
            raise DomainError("zero element is not a line")

    def mv(self) -> Multivector:
        return Multivector((0.0, self.c, self.a, self.b, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def from_mv(cls, u: Multivector, tol: float = DEFAULT_TOL) -> "Line":
        residue = (u - u.grade(1)).max_abs()
        if residue > tol * max(1.0, u.max_abs()):
            raise DomainError(f"not a pure line: {u!r}")
        return cls(u[2], u[3], u[1])

    def is_ideal(self, tol: float = DEFAULT_TOL) -> bool:
        return math.hypot(self.a, self.b) <= tol * _view_scale(self.a, self.b, self.c)

    def direction(self) -> tuple[float, float]:
        """Unnormalized direction vector; the polar point is this rotated 90 deg CCW."""
        return (self.b, -self.a)

    def __repr__(self) -> str:
        return f"Line[{self.a:g}, {self.b:g}, {self.c:g}]"


@dataclass(frozen=True, slots=True)
class Point:
    """Point with tuple convention (x, y, z); euclidean position (x/z, y/z)."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise DomainError(f"non-finite point coordinates ({self.x}, {self.y}, {self.z})")
        if self.x == 0.0 and self.y == 0.0 and self.z == 0.0:
            raise DomainError("zero element is not a point")

    @classmethod
    def from_xy(cls, x: float, y: float) -> "Point":
        return cls(x, y, 1.0)

    def mv(self) -> Multivector:
        return Multivector((0.0, 0.0, 0.0, 0.0, self.x, self.y, self.z, 0.0))

    @classmethod
    def from_mv(cls, u: Multivector, tol: float = DEFAULT_TOL) -> "Point":
        residue = (u - u.grade(2)).max_abs()
        if residue > tol * max(1.0, u.max_abs()):
            raise DomainError(f"not a pure point: {u!r}")
        return cls(u[4], u[5], u[6])

    def is_ideal(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.z) <= tol * _view_scale(self.x, self.y, self.z)

    def __repr__(self) -> str:
        return f"Point({self.x:g}, {self.y:g}, {self.z:g})"


@dataclass(frozen=True, slots=True)
class IdealPoint:
    """Point on the ideal line, read as a free vector (u, v)."""

    u: float
    v: float

    def __post_init__(self):
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "v", float(self.v))
        if not (math.isfinite(self.u) and math.isfinite(self.v)):
            raise DomainError(f"non-finite ideal point ({self.u}, {self.v})")
        if self.u == 0.0 and self.v == 0.0:
            raise DomainError("zero element is not an ideal point")

    def mv(self) -> Multivector:
        return Multivector((0.0, 0.0, 0.0, 0.0, self.u, self.v, 0.0, 0.0))

    def as_point(self) -> Point:
        return Point(self.u, self.v, 0.0)

    @classmethod
    def from_point(cls, p: Point, tol: float = DEFAULT_TOL) -> "IdealPoint":
        if not p.is_ideal(tol):
            raise DomainError(f"{p!r} is not ideal")
        return cls(p.x, p.y)

    def __repr__(self) -> str:
        return f"IdealPoint({self.u:g}, {self.v:g})"


@dataclass(frozen=True, slots=True)
class Pseudoscalar:
    """Grade-3 element s*e012; only its signed magnitude is meaningful."""

    s: float

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        if not math.isfinite(self.s):
            raise DomainError(f"non-finite pseudoscalar {self.s}")

    def mv(self) -> Multivector:
        return Multivector((0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, self.s))

    @classmethod
    def from_mv(cls, u: Multivector, tol: float = DEFAULT_TOL) -> "Pseudoscalar":
        residue = (u - u.grade(3)).max_abs()
        if residue > tol * max(1.0, u.max_abs()):
            raise DomainError(f"not a pure pseudoscalar: {u!r}")
        return cls(u[7])

    def __repr__(self) -> str:
        return f"Pseudoscalar({self.s:g})"


def as_mv(x) -> Multivector:
    """Coerce a typed view (or multivector, or number) to a raw multivector."""
    if isinstance(x, Multivector):
        return x
    if isinstance(x, (Line, Point, IdealPoint, Pseudoscalar)):
        return x.mv()
    if isinstance(x, (int, float)):
        s = float(x)
        return _zero_mv if s == 0.0 else Multivector((s, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))
    raise TypeError(f"cannot interpret {type(x).__name__} as a multivector")
