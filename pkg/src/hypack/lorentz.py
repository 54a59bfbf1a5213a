"""Linear algebra of the Lorentz space E^(1,3).

Points and planes of the projective model of hyperbolic 3-space are
represented by vectors of R^4 carrying the signature (1,3) bilinear form

    <x, y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3.

Vectors are projective representatives: x and c*x (c != 0) describe the
same point or plane, and every operation here is invariant under such
rescaling.  Points with <x, x> < 0 lie inside hyperbolic space (proper),
<x, x> = 0 on the absolute quadric (ideal), <x, x> > 0 outside (outer).
The same coordinates, read as a linear form, describe the polar plane of
the point, which is how planes are stored throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import DomainError

#: Relative tolerance deciding "on the quadric" in `classify`.
CLASSIFY_TOL = 1e-10

#: 4x4 real matrix as nested tuples, row-major, indices 0..3.
Mat4 = tuple[tuple[float, float, float, float], ...]


class PointClass(Enum):
    """Position of a projective point relative to the absolute quadric."""

    PROPER = "proper"
    IDEAL = "ideal"
    OUTER = "outer"


@dataclass(frozen=True)
class LorentzVec:
    """Immutable vector of E^(1,3); a projective point or plane form."""

    x0: float
    x1: float
    x2: float
    x3: float

    def __iter__(self) -> Iterator[float]:
        return iter((self.x0, self.x1, self.x2, self.x3))

    def __add__(self, other: "LorentzVec") -> "LorentzVec":
        return LorentzVec(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "LorentzVec") -> "LorentzVec":
        return LorentzVec(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __mul__(self, c: float) -> "LorentzVec":
        return LorentzVec(c * self.x0, c * self.x1, c * self.x2, c * self.x3)

    __rmul__ = __mul__

    def __neg__(self) -> "LorentzVec":
        return LorentzVec(-self.x0, -self.x1, -self.x2, -self.x3)

    def is_zero(self) -> bool:
        return self.x0 == 0.0 and self.x1 == 0.0 and self.x2 == 0.0 and self.x3 == 0.0


def bilinear_form(x: LorentzVec, y: LorentzVec) -> float:
    """Signature (1,3) product -x0*y0 + x1*y1 + x2*y2 + x3*y3."""
    return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3


def coord_norm_sq(x: LorentzVec) -> float:
    """Squared Euclidean norm of the coordinate 4-tuple (scale gauge only)."""
    return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3


def classify(x: LorentzVec, tol: float = CLASSIFY_TOL) -> PointClass:
    """Classify a projective point against the absolute quadric.

    A point counts as IDEAL when |<x,x>| <= tol * ||x||^2 with the
    Euclidean coordinate norm, which makes the test invariant under
    rescaling of the representative.
    """
    if x.is_zero():
        raise DomainError("zero vector does not represent a projective point")
    q = bilinear_form(x, x)
    if abs(q) <= tol * coord_norm_sq(x):
        return PointClass.IDEAL
    return PointClass.PROPER if q < 0.0 else PointClass.OUTER


def polar_plane(x: LorentzVec) -> LorentzVec:
    """Plane form of the polar plane of x: the locus {y : <x, y> = 0}.

    The polarity of the quadric is the identity on coordinates in this
    representation; the returned value is x reinterpreted as a form.
    """
    if x.is_zero():
        raise DomainError("zero vector has no polar plane")
    return LorentzVec(x.x0, x.x1, x.x2, x.x3)


def normalize_proper(x: LorentzVec) -> LorentzVec:
    """Representative of a proper point with <x, x> = -1 and x0 > 0."""
    q = bilinear_form(x, x)
    if not q < 0.0:
        raise DomainError(f"point is not proper: <x,x> = {q}")
    s = 1.0 / math.sqrt(-q)
    if x.x0 < 0.0:
        s = -s
    return x * s


def distance_proper(x: LorentzVec, y: LorentzVec) -> float:
    """Hyperbolic distance between two proper points (curvature -1 units).

    cosh d = -<x, y> on representatives normalized to <x, x> = -1 with
    positive time coordinate, so the quotient is >= 1 up to rounding.
    Evaluated through the equivalent chordal form d = 2 asinh(|x - y|/2),
    which stays accurate (and exactly zero) as the points coincide.
    """
    if classify(x) is not PointClass.PROPER:
        raise DomainError("first argument is not a proper point")
    if classify(y) is not PointClass.PROPER:
        raise DomainError("second argument is not a proper point")
    xn, yn = normalize_proper(x), normalize_proper(y)
    diff = xn - yn
    s = bilinear_form(diff, diff)  # equals 2 (cosh d - 1), spacelike
    if s < -2e-9:
        raise DomainError(
            f"inconsistent representatives: cosh quotient {1.0 + 0.5 * s} < 1"
        )
    return 2.0 * math.asinh(0.5 * math.sqrt(max(s, 0.0)))


def projectively_equal(x: LorentzVec, y: LorentzVec, tol: float = 1e-10) -> bool:
    """True when x and y differ only by a nonzero real factor."""
    if x.is_zero() or y.is_zero():
        raise DomainError("zero vector is not a projective element")
    xs, ys = tuple(x), tuple(y)
    i = max(range(4), key=lambda k: abs(xs[k]))
    if ys[i] == 0.0:
        return False
    c = xs[i] / ys[i]
    scale = max(abs(v) for v in xs)
    return all(abs(a - c * b) <= tol * scale for a, b in zip(xs, ys))


def invert4(m: Sequence[Sequence[float]]) -> Mat4:
    """Invert a 4x4 matrix by Gauss-Jordan elimination with partial pivoting.

    Raises DomainError for a singular (or numerically singular) matrix.
    """
    a = [list(map(float, row)) for row in m]
    if len(a) != 4 or any(len(row) != 4 for row in a):
        raise DomainError("invert4 expects a 4x4 matrix")
    scale = max(max(abs(v) for v in row) for row in a)
    if scale == 0.0:
        raise DomainError("singular matrix: all entries zero")
    inv = [[1.0 if i == j else 0.0 for j in range(4)] for i in range(4)]
    for col in range(4):
        pivot_row = max(range(col, 4), key=lambda r: abs(a[r][col]))
        pivot = a[pivot_row][col]
        if abs(pivot) <= 1e-13 * scale:
            raise DomainError("singular matrix: pivot below threshold")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        f = 1.0 / pivot
        a[col] = [v * f for v in a[col]]
        inv[col] = [v * f for v in inv[col]]
        for r in range(4):
            if r == col:
                continue
            factor = a[r][col]
            if factor != 0.0:
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def mat_mul(a: Sequence[Sequence[float]], b: Sequence[Sequence[float]]) -> Mat4:
    """Product of two 4x4 matrices."""
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def max_residual(m: Sequence[Sequence[float]], minv: Sequence[Sequence[float]]) -> float:
    """Max-norm of m @ minv - I, the inversion quality measure."""
    prod = mat_mul(m, minv)
    return max(
        abs(prod[i][j] - (1.0 if i == j else 0.0))
        for i in range(4)
        for j in range(4)
    )
