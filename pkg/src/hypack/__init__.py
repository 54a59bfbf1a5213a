"""Hyperball packing density in regular truncated tetrahedra of H^3.

The package constructs the one-parameter family of regular truncated
tetrahedra in the projective (Lorentz) model of hyperbolic 3-space,
evaluates the hyperball height, orthoscheme and hyperball-piece volumes
in closed form, and maximizes the packing density over the parameter.
"""

from .errors import DomainError, QuadratureError
from .lobachevsky import L_MAX, lobachevsky, lobachevsky_oracle
from .lorentz import (
    CLASSIFY_TOL,
    LorentzVec,
    Mat4,
    PointClass,
    bilinear_form,
    classify,
    distance_proper,
    invert4,
    normalize_proper,
    polar_plane,
    projectively_equal,
)
from .optimize import (
    DEFAULT_BRACKET,
    DEFAULT_TOL,
    MonotonicityReport,
    OptimizationResult,
    maximize,
    monotonicity_scan,
)
from .orthoscheme import (
    OrthoschemeAngles,
    OrthoschemeMetrics,
    SchlafliData,
    height,
    metrics,
    schlafli_matrix,
    theta,
    volume_kellerhals,
)
from .tetrahedron import (
    BOROCZKY_FLORIAN_BOUND,
    DensityPoint,
    FaceTriangle,
    OrthoschemeVertices,
    TruncatedTetra,
    build,
    density,
    face_triangle,
    hyperball_piece_volume,
)

__version__ = "0.1.0"

__all__ = [
    "BOROCZKY_FLORIAN_BOUND",
    "CLASSIFY_TOL",
    "DEFAULT_BRACKET",
    "DEFAULT_TOL",
    "DensityPoint",
    "DomainError",
    "FaceTriangle",
    "L_MAX",
    "LorentzVec",
    "Mat4",
    "MonotonicityReport",
    "OptimizationResult",
    "OrthoschemeAngles",
    "OrthoschemeMetrics",
    "OrthoschemeVertices",
    "PointClass",
    "QuadratureError",
    "SchlafliData",
    "TruncatedTetra",
    "bilinear_form",
    "build",
    "classify",
    "density",
    "distance_proper",
    "face_triangle",
    "height",
    "hyperball_piece_volume",
    "invert4",
    "lobachevsky",
    "lobachevsky_oracle",
    "maximize",
    "metrics",
    "monotonicity_scan",
    "normalize_proper",
    "polar_plane",
    "projectively_equal",
    "schlafli_matrix",
    "theta",
    "volume_kellerhals",
]
