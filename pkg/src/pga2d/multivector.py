"""Dense multivector arithmetic for the degenerate-metric plane algebra.

The algebra is generated by basis 1-vectors e0, e1, e2 with e0*e0 = 0 and
e1*e1 = e2*e2 = 1 (signature (2,0,1)), built over the dual projectivized
exterior algebra: grade 1 carries lines, grade 2 carries points, and the
wedge is the meet.  Coefficients are stored densely in the fixed blade order

    1, e0, e1, e2, e20, e01, e12, e012

chosen so that the line tuple [a, b, c] = a*e1 + b*e2 + c*e0 and the point
tuple (x, y, z) = x*e20 + y*e01 + z*e12 each occupy contiguous slots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_TOL = 1e-9

BLADE_NAMES = ("1", "e0", "e1", "e2", "e20", "e01", "e12", "e012")
BLADE_GRADES = (0, 1, 1, 1, 2, 2, 2, 3)
DIM = 8

# Geometric product of basis blades: _CAYLEY[i][j] = (sign, index) with
# blade_i * blade_j = sign * blade_index.  sign 0 means the product vanishes
# (every product that touches e0 twice).  The table is a frozen constant;
# the test suite regenerates it symbolically from the signature rules and
# checks the two agree entry for entry.
_CAYLEY = (
    # 1
    ((1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)),
    # e0
    ((1, 1), (0, 0), (1, 5), (-1, 4), (0, 0), (0, 0), (1, 7), (0, 0)),
    # e1
    ((1, 2), (-1, 5), (1, 0), (1, 6), (1, 7), (-1, 1), (1, 3), (1, 4)),
    # e2
    ((1, 3), (1, 4), (-1, 6), (1, 0), (1, 1), (1, 7), (-1, 2), (1, 5)),
    # e20
    ((1, 4), (0, 0), (1, 7), (-1, 1), (0, 0), (0, 0), (1, 5), (0, 0)),
    # e01
    ((1, 5), (0, 0), (1, 1), (1, 7), (0, 0), (0, 0), (-1, 4), (0, 0)),
    # e12
    ((1, 6), (1, 7), (-1, 3), (1, 2), (-1, 5), (1, 4), (-1, 0), (-1, 1)),
    # e012
    ((1, 7), (0, 0), (1, 4), (1, 5), (0, 0), (0, 0), (-1, 1), (0, 0)),
)

# Grade-filtered views of the same table.  For homogeneous u, v the outer
# product keeps the grade (k+m) part of uv and the dot product the |k-m|
# part; extending blade-wise realizes the bilinear extension.
_OUTER = tuple(
    tuple(
        (s, k) if s and BLADE_GRADES[k] == BLADE_GRADES[i] + BLADE_GRADES[j] else (0, 0)
        for j, (s, k) in enumerate(row)
    )
    for i, row in enumerate(_CAYLEY)
)

_DOT = tuple(
    tuple(
        (s, k) if s and BLADE_GRADES[k] == abs(BLADE_GRADES[i] - BLADE_GRADES[j]) else (0, 0)
        for j, (s, k) in enumerate(row)
    )
    for i, row in enumerate(_CAYLEY)
)

# Poincare duality: the unique grade-complementing blade map with signs fixed
# by  blade ^ dual(blade) = e012.  In this basis every sign comes out +1, so
# the map is a pure coefficient swap and an exact involution.  The signs are
# re-derived from the defining property by the test-suite oracle.
_DUAL = ((1, 7), (1, 6), (1, 4), (1, 5), (1, 2), (1, 3), (1, 1), (1, 0))


@dataclass(frozen=True, slots=True)
class Multivector:
    """Immutable element of the algebra, eight blade coefficients."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != DIM:
            raise ValueError(f"expected {DIM} coefficients, got {len(coeffs)}")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError(f"non-finite coefficient in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- ring operations ---------------------------------------------------

    def gp(self, other: "Multivector") -> "Multivector":
        """Geometric product."""
        return _tabled_product(self, other, _CAYLEY)

    def outer(self, other: "Multivector") -> "Multivector":
        """Outer (wedge) product; acts as the meet on lines and points."""
        return _tabled_product(self, other, _OUTER)

    def dot(self, other: "Multivector") -> "Multivector":
        """Inner product: lowest-grade part of the geometric product."""
        return _tabled_product(self, other, _DOT)

    def commutator(self, other: "Multivector") -> "Multivector":
        """Grade-2 part of the geometric product (cross product of points)."""
        return self.gp(other).grade(2)

    def dual(self) -> "Multivector":
        """Duality map sending grade k to grade 3-k, blade ^ dual(blade) = e012."""
        out = [0.0] * DIM
        for i, c in enumerate(self.coeffs):
            s, k = _DUAL[i]
            out[k] = s * c
        return Multivector(out)

    def join(self, other: "Multivector") -> "Multivector":
        """Regressive product: dual of the wedge of the duals (span operator)."""
        return self.dual().outer(other.dual()).dual()

    def reverse(self) -> "Multivector":
        """Reverse the order of all 1-vector factors: negates grades 2 and 3."""
        c = self.coeffs
        return Multivector((c[0], c[1], c[2], c[3], -c[4], -c[5], -c[6], -c[7]))

    def grade(self, k: int) -> "Multivector":
        """Projection onto grade k; k outside 0..3 is a contract violation."""
        if not 0 <= k <= 3:
            raise ValueError(f"grade must be in 0..3, got {k}")
        return Multivector(
            tuple(c if BLADE_GRADES[i] == k else 0.0 for i, c in enumerate(self.coeffs))
        )

    def scaled(self, factor: float) -> "Multivector":
        return Multivector(tuple(factor * c for c in self.coeffs))

    # -- vector-space plumbing ----------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Multivector":
        return self.scaled(-1.0)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.gp(other)
        return self.scaled(float(other))

    def __rmul__(self, other):
        return self.scaled(float(other))

    def __xor__(self, other: "Multivector") -> "Multivector":
        return self.outer(other)

    def __or__(self, other: "Multivector") -> "Multivector":
        return self.dot(other)

    def __and__(self, other: "Multivector") -> "Multivector":
        return self.join(other)

    def __invert__(self) -> "Multivector":
        return self.reverse()

    def __iter__(self) -> Iterator[float]:
        return iter(self.coeffs)

    def __getitem__(self, index: int) -> float:
        return self.coeffs[index]

    # -- predicates and helpers ----------------------------------------------

    def scalar_part(self) -> float:
        return self.coeffs[0]

    def pseudo_part(self) -> float:
        """Signed magnitude of the grade-3 part (the coefficient of e012)."""
        return self.coeffs[7]

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return self.max_abs() <= tol

    def approx_eq(self, other: "Multivector", tol: float = DEFAULT_TOL) -> bool:
        return (self - other).max_abs() <= tol

    def __repr__(self) -> str:
        terms = [
            f"{c:g}*{BLADE_NAMES[i]}" if i else f"{c:g}"
            for i, c in enumerate(self.coeffs)
            if c != 0.0
        ]
        return "Multivector<{}>".format(" + ".join(terms) if terms else "0")


def _tabled_product(u: Multivector, v: Multivector, table) -> Multivector:
    out = [0.0] * DIM
    for i, ui in enumerate(u.coeffs):
        if ui == 0.0:
            continue
        row = table[i]
        for j, vj in enumerate(v.coeffs):
            if vj == 0.0:
                continue
            s, k = row[j]
            if s:
                out[k] += s * ui * vj
    return Multivector(out)


def basis(index: int) -> Multivector:
    return Multivector(tuple(1.0 if i == index else 0.0 for i in range(DIM)))


def from_scalar(value: float) -> Multivector:
    return Multivector((float(value), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))


zero = Multivector((0.0,) * DIM)
one = basis(0)
e0 = basis(1)
e1 = basis(2)
e2 = basis(3)
e20 = basis(4)
e01 = basis(5)
e12 = basis(6)
e012 = basis(7)

blades = dict(zip(BLADE_NAMES, (one, e0, e1, e2, e20, e01, e12, e012)))


# Functional aliases matching the operation names used throughout the package.
def gp(u: Multivector, v: Multivector) -> Multivector:
    return u.gp(v)


def outer(u: Multivector, v: Multivector) -> Multivector:
    return u.outer(v)


def dot(u: Multivector, v: Multivector) -> Multivector:
    return u.dot(v)


def commutator(u: Multivector, v: Multivector) -> Multivector:
    return u.commutator(v)


def dual(u: Multivector) -> Multivector:
    return u.dual()


def join(u: Multivector, v: Multivector) -> Multivector:
    return u.join(v)


def reverse(u: Multivector) -> Multivector:
    return u.reverse()


def grade(u: Multivector, k: int) -> Multivector:
    return u.grade(k)


def add(u: Multivector, v: Multivector) -> Multivector:
    return u + v


def sub(u: Multivector, v: Multivector) -> Multivector:
    return u - v


def scale(u: Multivector, factor: float) -> Multivector:
    return u.scaled(factor)


def from_coeffs(values: Iterable[float]) -> Multivector:
    return Multivector(tuple(values))


def cayley_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """The kernel's geometric-product table (sign, index), row blade times column blade."""
    return _CAYLEY


def dual_table() -> tuple[tuple[int, int], ...]:
    """The kernel's duality signs: blade i maps to sign * blade index."""
    return _DUAL
