"""Regular truncated tetrahedron and the density of its hyperball packing.

Four planes in tetrahedral symmetry, meeting pairwise under the dihedral
angle 2*pi/p with p > 6, intersect by triples in four points outside the
absolute quadric.  Cutting these outer vertices off with their polar
planes yields a compact polyhedron with four hexagonal faces (in the
original planes) and four triangular faces (in the polar planes).  The
triangle planes are pairwise ultraparallel at distance 2*h(p), and the
four congruent hyperballs of height h(p) based on them touch along the
hexagon-hexagon edges.

The polyhedron splits into 24 congruent simply truncated orthoschemes;
one representative has vertices

    p0  centre of the body,
    p1  centre of a hexagonal face,
    p2  midpoint of an edge shared by two hexagons,
    q0  centre of an adjacent triangular face,
    q1  midpoint of a triangle edge,
    q2  endpoint of that edge (a vertex of the body).

The packing density is the volume of hyperball material inside the body
divided by the body volume, which by congruence reduces to the quotient
of the per-orthoscheme hyperball piece over the orthoscheme volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .lorentz import (
    LorentzVec,
    bilinear_form,
    normalize_proper,
    polar_plane,
)
from .orthoscheme import OrthoschemeAngles, height, volume_kellerhals

_SQRT3 = math.sqrt(3.0)

# unit vectors toward the vertices of a regular Euclidean tetrahedron
_TETRA_DIRS = (
    (1.0 / _SQRT3, 1.0 / _SQRT3, 1.0 / _SQRT3),
    (1.0 / _SQRT3, -1.0 / _SQRT3, -1.0 / _SQRT3),
    (-1.0 / _SQRT3, 1.0 / _SQRT3, -1.0 / _SQRT3),
    (-1.0 / _SQRT3, -1.0 / _SQRT3, 1.0 / _SQRT3),
)

#: All index pairs of distinct planes/vertices, i < j.
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class OrthoschemeVertices:
    """Vertices of the representative simply truncated orthoscheme."""

    q0: LorentzVec
    q1: LorentzVec
    q2: LorentzVec
    p0: LorentzVec
    p1: LorentzVec
    p2: LorentzVec


@dataclass(frozen=True)
class TruncatedTetra:
    """Coordinate realization of the regular truncated tetrahedron."""

    p: float
    base_planes: tuple[LorentzVec, LorentzVec, LorentzVec, LorentzVec]
    outer_vertices: tuple[LorentzVec, LorentzVec, LorentzVec, LorentzVec]
    trunc_planes: tuple[LorentzVec, LorentzVec, LorentzVec, LorentzVec]
    orthoscheme_vertices: OrthoschemeVertices

    def base_dihedral(self, i: int, j: int) -> float:
        """Interior dihedral angle between base planes i and j."""
        if i == j:
            raise DomainError("dihedral angle needs two distinct planes")
        return math.acos(-bilinear_form(self.base_planes[i], self.base_planes[j]))

    def trunc_plane_distance(self, i: int, j: int) -> float:
        """Distance between the ultraparallel truncation planes i and j.

        These carry the triangular faces and act as the base planes of
        the packed hyperballs, so each pairwise distance equals 2*h(p).
        """
        if i == j:
            raise DomainError("plane distance needs two distinct planes")
        c = abs(bilinear_form(self.trunc_planes[i], self.trunc_planes[j]))
        if c < 1.0:
            raise DomainError("truncation planes are not ultraparallel")
        return math.acosh(c)


@dataclass(frozen=True)
class FaceTriangle:
    """One of the 24 congruent subtriangles of the triangular faces."""

    q0: LorentzVec
    q1: LorentzVec
    q2: LorentzVec
    angle_q0: float
    angle_q1: float
    angle_q2: float
    area: float


@dataclass(frozen=True)
class DensityPoint:
    """Evaluated packing data for one parameter value."""

    p: float
    height: float
    vol_orthoscheme: float
    vol_hyperball_piece: float
    delta: float

    @property
    def vol_tetrahedron(self) -> float:
        """Volume of the whole truncated tetrahedron (24 orthoschemes)."""
        return 24.0 * self.vol_orthoscheme


def _det3(m: list[list[float]]) -> float:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _meet3(u: LorentzVec, v: LorentzVec, w: LorentzVec) -> LorentzVec:
    """Common point of three planes given by their forms.

    The incidence conditions <u,x> = <v,x> = <w,x> = 0 are three linear
    equations; the solution is the vector of signed 3x3 minors of the
    coefficient rows.
    """
    rows = [(-f.x0, f.x1, f.x2, f.x3) for f in (u, v, w)]
    comps = []
    for i in range(4):
        minor = [[row[j] for j in range(4) if j != i] for row in rows]
        comps.append((1.0 if i % 2 == 0 else -1.0) * _det3(minor))
    x = LorentzVec(*comps)
    if x.is_zero():
        raise DomainError("planes do not meet in a single point")
    return x


def _unit_euclidean(x: LorentzVec) -> LorentzVec:
    """Scale-gauge representative: Euclidean unit coordinates, x0 >= 0."""
    n = math.sqrt(x.x0 ** 2 + x.x1 ** 2 + x.x2 ** 2 + x.x3 ** 2)
    y = x * (1.0 / n)
    return -y if y.x0 < 0.0 else y


def _unit_spacelike(x: LorentzVec) -> LorentzVec:
    q = bilinear_form(x, x)
    if not q > 0.0:
        raise DomainError("plane form must be spacelike")
    return x * (1.0 / math.sqrt(q))


def _foot_on_plane(point: LorentzVec, plane: LorentzVec) -> LorentzVec:
    """Orthogonal projection of a proper point onto a plane."""
    lam = bilinear_form(point, plane) / bilinear_form(plane, plane)
    return normalize_proper(point - lam * plane)


def _midpoint(x: LorentzVec, y: LorentzVec) -> LorentzVec:
    return normalize_proper(normalize_proper(x) + normalize_proper(y))


def _angle_at(x: LorentzVec, y: LorentzVec, z: LorentzVec) -> float:
    """Angle at x between the geodesics toward y and z.

    Tangents are Lorentz-orthogonalized against the (normalized) vertex;
    the induced metric on that complement is positive definite.
    """
    xn, yn, zn = normalize_proper(x), normalize_proper(y), normalize_proper(z)
    ty = yn + bilinear_form(yn, xn) * xn
    tz = zn + bilinear_form(zn, xn) * xn
    c = bilinear_form(ty, tz) / math.sqrt(
        bilinear_form(ty, ty) * bilinear_form(tz, tz)
    )
    return math.acos(min(1.0, max(-1.0, c)))


def build(p: float) -> TruncatedTetra:
    """Coordinate realization of the truncated tetrahedron for p > 6.

    The body centre sits on the time axis at (1,0,0,0) and the four base
    planes take the tetrahedral frame, tilted so that adjacent planes
    meet under the angle 2*pi/p.  Outer vertices are triple
    intersections of base planes; truncation planes are their polars.
    """
    if not (math.isfinite(p) and p > 6.0):
        raise DomainError(f"parameter must be a finite real > 6, got {p}")
    cos2 = math.cos(2.0 * math.pi / p)
    # tilt fixing the dihedral angle; positive iff the triple points are outer
    a = math.sqrt((3.0 * cos2 - 1.0) / 4.0)
    b = math.sqrt(1.0 + a * a)
    base = tuple(
        LorentzVec(a, b * nx, b * ny, b * nz) for nx, ny, nz in _TETRA_DIRS
    )
    outer = []
    for i in range(4):
        others = [base[j] for j in range(4) if j != i]
        outer.append(_unit_euclidean(_meet3(*others)))
    outer = tuple(outer)
    trunc = tuple(_unit_spacelike(polar_plane(v)) for v in outer)

    p0 = LorentzVec(1.0, 0.0, 0.0, 0.0)
    # representative orthoscheme: triangle face 0, hexagon face 1
    q2 = normalize_proper(_meet3(trunc[0], base[1], base[2]))
    q2_far = normalize_proper(_meet3(trunc[3], base[1], base[2]))
    p2 = _midpoint(q2, q2_far)
    w = normalize_proper(_meet3(trunc[0], base[1], base[3]))
    q1 = _midpoint(w, q2)
    q0 = _foot_on_plane(p0, trunc[0])
    p1 = _foot_on_plane(p0, base[1])

    return TruncatedTetra(
        p=p,
        base_planes=base,
        outer_vertices=outer,
        trunc_planes=trunc,
        orthoscheme_vertices=OrthoschemeVertices(q0=q0, q1=q1, q2=q2,
                                                 p0=p0, p1=p1, p2=p2),
    )


def face_triangle(p: float) -> FaceTriangle:
    """Subtriangle q0 q1 q2 of a triangular face, with angles and area.

    The area comes from the angle defect pi - (angle sum), exact in
    curvature -1.  By the sixfold symmetry of the face the angles at q0
    and q1 are pi/3 and pi/2; the angle at q2 varies with p.
    """
    verts = build(p).orthoscheme_vertices
    q0, q1, q2 = verts.q0, verts.q1, verts.q2
    a0 = _angle_at(q0, q1, q2)
    a1 = _angle_at(q1, q0, q2)
    a2 = _angle_at(q2, q0, q1)
    area = math.pi - a0 - a1 - a2
    if area <= 0.0:
        raise DomainError(f"degenerate face triangle for p = {p}")
    return FaceTriangle(q0=q0, q1=q1, q2=q2,
                        angle_q0=a0, angle_q1=a1, angle_q2=a2, area=area)


def hyperball_piece_volume(area: float, h: float) -> float:
    """Volume of the hyperball slab of height h over a base polygon.

    Bolyai's prism formula: area/4 * (sinh(2h) + 2h) in curvature -1
    units.  Monotone increasing in both arguments.
    """
    if area < 0.0:
        raise DomainError(f"area must be nonnegative, got {area}")
    if h < 0.0:
        raise DomainError(f"height must be nonnegative, got {h}")
    return 0.25 * area * (math.sinh(2.0 * h) + 2.0 * h)


def density(p: float) -> DensityPoint:
    """Packing density data of the truncated tetrahedron at parameter p.

    delta is the per-orthoscheme quotient piece/volume; multiplying both
    sides by 24 shows it equals the whole-body ratio of the four
    hyperball pieces to the body volume.
    """
    h = height(p)
    vol = volume_kellerhals(OrthoschemeAngles.from_parameter(p))
    tri = face_triangle(p)
    piece = hyperball_piece_volume(tri.area, h)
    return DensityPoint(
        p=p,
        height=h,
        vol_orthoscheme=vol,
        vol_hyperball_piece=piece,
        delta=piece / vol,
    )


#: Density upper bound of ball and horoball packings of hyperbolic 3-space,
#: approached by delta as p decreases to 6.
BOROCZKY_FLORIAN_BOUND = 0.85328
