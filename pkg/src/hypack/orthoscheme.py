"""Simply truncated orthoscheme of the regular truncated tetrahedron family.

For a real parameter p > 6 the orthoscheme has essential dihedral angles
(pi/p, pi/3, pi/3).  Its vertex opposite the last face lies outside the
absolute quadric and is cut off by its polar plane.  Two closed-form
quantities drive everything downstream:

* the volume, a seven-term Lobachevsky sum in the angles and an
  auxiliary angle theta (Kellerhals' orthoscheme volume formula);
* the hyperball height h(p), the distance from the mid-edge vertex to
  the truncating polar plane, read off the inverse of the Gram matrix
  of the face normals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .lobachevsky import lobachevsky
from .lorentz import Mat4, invert4


@dataclass(frozen=True)
class OrthoschemeAngles:
    """Essential dihedral angles (radians), each in [0, pi/2]."""

    alpha01: float
    alpha12: float
    alpha23: float

    @classmethod
    def from_parameter(cls, p: float) -> "OrthoschemeAngles":
        """Angles (pi/p, pi/3, pi/3) of the truncated tetrahedron family."""
        _require_parameter(p)
        return cls(math.pi / p, math.pi / 3.0, math.pi / 3.0)


@dataclass(frozen=True)
class SchlafliData:
    """Gram matrix of the orthoscheme face normals and its inverse."""

    p: float
    c: Mat4
    h: Mat4


@dataclass(frozen=True)
class OrthoschemeMetrics:
    """Derived scalar data of the orthoscheme for one parameter value."""

    p: float
    theta: float
    volume: float
    height: float


def _require_parameter(p: float) -> None:
    if not (math.isfinite(p) and p > 6.0):
        raise DomainError(f"parameter must be a finite real > 6, got {p}")


def schlafli_matrix(p: float) -> SchlafliData:
    """Gram matrix for angles (pi/p, pi/3, pi/3) and its inverse.

    The matrix is symmetric with unit diagonal; off-diagonal entries are
    minus the cosines of the dihedral angles along the face chain, zero
    for non-adjacent faces.
    """
    _require_parameter(p)
    cp = math.cos(math.pi / p)
    c: Mat4 = (
        (1.0, -cp, 0.0, 0.0),
        (-cp, 1.0, -0.5, 0.0),
        (0.0, -0.5, 1.0, -0.5),
        (0.0, 0.0, -0.5, 1.0),
    )
    return SchlafliData(p=p, c=c, h=invert4(c))


def theta(angles: OrthoschemeAngles) -> float:
    """Auxiliary angle of the volume formula, in [0, pi/2).

    tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23)
    """
    a01, a12, a23 = angles.alpha01, angles.alpha12, angles.alpha23
    radicand = math.cos(a12) ** 2 - math.sin(a01) ** 2 * math.sin(a23) ** 2
    if radicand < -1e-15:
        raise DomainError(
            f"angles outside the truncated orthoscheme regime: radicand {radicand}"
        )
    denom = math.cos(a01) * math.cos(a23)
    if denom <= 0.0:
        raise DomainError("cos(alpha01) * cos(alpha23) must be positive")
    return math.atan2(math.sqrt(max(radicand, 0.0)), denom)


def volume_kellerhals(angles: OrthoschemeAngles) -> float:
    """Closed-form hyperbolic volume of the complete orthoscheme."""
    a01, a12, a23 = angles.alpha01, angles.alpha12, angles.alpha23
    t = theta(angles)
    half_pi = 0.5 * math.pi
    return 0.25 * (
        lobachevsky(a01 + t)
        - lobachevsky(a01 - t)
        + lobachevsky(half_pi + a12 - t)
        + lobachevsky(half_pi - a12 - t)
        + lobachevsky(a23 + t)
        - lobachevsky(a23 - t)
        + 2.0 * lobachevsky(half_pi - t)
    )


def height(p: float) -> float:
    """Hyperball height h(p): distance from the mid-edge vertex to the
    truncating polar plane.

    With h_ij the inverse Gram matrix, cosh h = sqrt((h22*h33 - h23^2) /
    (h22*h33)) on the 0-based positions of the truncated vertex pair.
    The quotient is >= 1 exactly when the last vertex is outer, i.e. for
    p > 6.
    """
    data = schlafli_matrix(p)
    h22 = data.h[2][2]
    h33 = data.h[3][3]
    h23 = data.h[2][3]
    quotient = (h22 * h33 - h23 * h23) / (h22 * h33)
    if quotient < 1.0 - 1e-12:
        raise DomainError(
            f"cosh^2 quotient {quotient} < 1: vertex not outer for p = {p}"
        )
    return math.acosh(math.sqrt(max(quotient, 1.0)))


def metrics(p: float) -> OrthoschemeMetrics:
    """Bundle theta, volume and height for one parameter value."""
    angles = OrthoschemeAngles.from_parameter(p)
    return OrthoschemeMetrics(
        p=p,
        theta=theta(angles),
        volume=volume_kellerhals(angles),
        height=height(p),
    )
