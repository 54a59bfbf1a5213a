"""Tests of the signature (1,3) kernel: form, classification, polarity,
distance and 4x4 inversion."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hypack.errors import DomainError
from hypack.lorentz import (
    LorentzVec,
    PointClass,
    bilinear_form,
    classify,
    distance_proper,
    invert4,
    max_residual,
    normalize_proper,
    polar_plane,
    projectively_equal,
)

E0 = LorentzVec(1.0, 0.0, 0.0, 0.0)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)

vectors = st.builds(LorentzVec, finite, finite, finite, finite)


def _random_proper(rng: random.Random) -> LorentzVec:
    r = rng.uniform(0.0, 3.0)
    cth = rng.uniform(-1.0, 1.0)
    sth = math.sqrt(1.0 - cth * cth)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return LorentzVec(
        math.cosh(r),
        math.sinh(r) * sth * math.cos(phi),
        math.sinh(r) * sth * math.sin(phi),
        math.sinh(r) * cth,
    )


# ---------------------------------------------------------------- form

def test_form_time_axis():
    assert bilinear_form(E0, E0) == -1.0


def test_form_space_axis():
    x = LorentzVec(0.0, 1.0, 0.0, 0.0)
    assert bilinear_form(x, x) == 1.0


def test_form_null_vector():
    x = LorentzVec(1.0, 1.0, 0.0, 0.0)
    assert bilinear_form(x, x) == 0.0


@given(vectors, vectors)
@settings(derandomize=True, database=None, max_examples=200)
def test_form_symmetric(x, y):
    assert bilinear_form(x, y) == bilinear_form(y, x)


@given(vectors, vectors, vectors, finite, finite)
@settings(derandomize=True, database=None, max_examples=200)
def test_form_bilinear(x, y, z, s, t):
    lhs = bilinear_form(s * x + t * y, z)
    rhs = s * bilinear_form(x, z) + t * bilinear_form(y, z)
    scale = 1.0 + abs(lhs) + abs(rhs)
    assert abs(lhs - rhs) <= 1e-9 * scale


# ------------------------------------------------------------ classify

@pytest.mark.parametrize(
    "vec,expected",
    [
        (LorentzVec(1.0, 0.5, 0.0, 0.0), PointClass.PROPER),
        (LorentzVec(1.0, 1.0, 0.0, 0.0), PointClass.IDEAL),
        (LorentzVec(1.0, 2.0, 0.0, 0.0), PointClass.OUTER),
    ],
)
def test_classify_examples(vec, expected):
    assert classify(vec) is expected


def test_classify_rejects_zero():
    with pytest.raises(DomainError):
        classify(LorentzVec(0.0, 0.0, 0.0, 0.0))


@given(
    st.builds(
        LorentzVec,
        st.integers(-9, 9).map(float),
        st.integers(-9, 9).map(float),
        st.integers(-9, 9).map(float),
        st.integers(-9, 9).map(float),
    ).filter(lambda v: not v.is_zero()),
    st.integers(-8, 8),
    st.sampled_from([1.0, -1.0]),
)
@settings(derandomize=True, database=None, max_examples=300)
def test_classify_scale_invariant(x, k, sign):
    # powers of two scale exactly in floating point
    c = sign * 2.0 ** k
    assert classify(c * x) is classify(x)


# ------------------------------------------------------------ polarity

def test_polar_plane_of_space_axis_contains_time_axis():
    plane = polar_plane(LorentzVec(0.0, 1.0, 0.0, 0.0))
    assert bilinear_form(plane, E0) == 0.0


def test_outer_point_not_on_own_polar():
    x = LorentzVec(1.0, 2.0, 0.0, 0.0)
    assert bilinear_form(x, polar_plane(x)) == bilinear_form(x, x) != 0.0


def test_polarity_involution():
    x = LorentzVec(0.3, -1.7, 2.2, 0.9)
    assert projectively_equal(polar_plane(polar_plane(x)), x)


def test_polar_plane_rejects_zero():
    with pytest.raises(DomainError):
        polar_plane(LorentzVec(0.0, 0.0, 0.0, 0.0))


# ------------------------------------------------------------ distance

def test_distance_to_self_is_zero():
    x = LorentzVec(1.2, 0.3, -0.2, 0.1)
    assert distance_proper(x, x) == 0.0


def test_distance_along_geodesic():
    y = LorentzVec(math.cosh(1.0), math.sinh(1.0), 0.0, 0.0)
    assert abs(distance_proper(E0, y) - 1.0) <= 1e-14


def test_distance_mid_edge_to_face_vertex():
    from hypack.tetrahedron import build

    verts = build(7.0).orthoscheme_vertices
    assert abs(distance_proper(verts.p2, verts.q2) - 0.78871) <= 1e-4


def test_distance_scale_invariant():
    rng = random.Random(1)
    for _ in range(100):
        x, y = _random_proper(rng), _random_proper(rng)
        c = rng.choice([-1.0, 1.0]) * math.exp(rng.uniform(-6, 6))
        e = rng.choice([-1.0, 1.0]) * math.exp(rng.uniform(-6, 6))
        assert abs(distance_proper(c * x, e * y) - distance_proper(x, y)) <= 1e-9


def test_distance_triangle_inequality():
    rng = random.Random(2)
    for _ in range(200):
        x, y, z = (_random_proper(rng) for _ in range(3))
        assert distance_proper(x, z) <= (
            distance_proper(x, y) + distance_proper(y, z) + 1e-9
        )


def test_distance_rejects_non_proper():
    outer = LorentzVec(1.0, 2.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        distance_proper(E0, outer)
    with pytest.raises(DomainError):
        distance_proper(outer, E0)


def test_normalize_proper_gauge():
    x = LorentzVec(-3.0, 0.3, -0.6, 1.2)
    n = normalize_proper(x)
    assert n.x0 > 0.0
    assert abs(bilinear_form(n, n) + 1.0) <= 1e-14


def test_normalize_proper_rejects_outer():
    with pytest.raises(DomainError):
        normalize_proper(LorentzVec(1.0, 2.0, 0.0, 0.0))


# ----------------------------------------------------------- inversion

IDENTITY = tuple(tuple(1.0 if i == j else 0.0 for j in range(4)) for i in range(4))


def test_invert_identity():
    assert invert4(IDENTITY) == IDENTITY


def test_invert_diagonal():
    m = ((1.0, 0, 0, 0), (0, 2.0, 0, 0), (0, 0, 4.0, 0), (0, 0, 0, 8.0))
    inv = invert4(m)
    assert inv[0][0] == 1.0 and inv[1][1] == 0.5
    assert inv[2][2] == 0.25 and inv[3][3] == 0.125


def test_invert_rejects_singular():
    ones = tuple(tuple(1.0 for _ in range(4)) for _ in range(4))
    with pytest.raises(DomainError):
        invert4(ones)
    with pytest.raises(DomainError):
        invert4(tuple(tuple(0.0 for _ in range(4)) for _ in range(4)))


def test_invert_schlafli_residual():
    from hypack.orthoscheme import schlafli_matrix

    data = schlafli_matrix(7.0)
    assert max_residual(data.c, data.h) < 1e-12


def test_invert_random_well_conditioned():
    rng = random.Random(3)
    for _ in range(50):
        m = tuple(
            tuple((1.0 if i == j else 0.0) + 0.2 * rng.uniform(-1, 1) for j in range(4))
            for i in range(4)
        )
        assert max_residual(m, invert4(m)) < 1e-12
