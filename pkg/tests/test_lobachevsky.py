"""Series evaluation of the Lobachevsky function against the quadrature
oracle, plus its functional identities."""

import math
import random

import pytest

from hypack.errors import DomainError, QuadratureError
from hypack.lobachevsky import L_MAX, lobachevsky, lobachevsky_oracle

# frozen from lobachevsky_oracle(pi/6, 1e-13)
L_AT_PI_6 = 0.5074708032048267


def test_zero():
    assert lobachevsky(0.0) == 0.0
    assert lobachevsky_oracle(0.0) == 0.0


def test_half_pi_vanishes():
    assert abs(lobachevsky(math.pi / 2.0)) <= 1e-15


def test_pi_vanishes():
    assert lobachevsky(math.pi) == 0.0


def test_value_at_pi_six():
    assert abs(lobachevsky_oracle(math.pi / 6.0, 1e-13) - L_AT_PI_6) <= 5e-13
    assert abs(lobachevsky(math.pi / 6.0) - L_AT_PI_6) <= 1e-12


def test_l_max_constant():
    assert abs(L_MAX - L_AT_PI_6) <= 1e-12


def test_oracle_agreement_on_grid():
    n = 200
    worst = 0.0
    for k in range(n):
        x = -math.pi + 2.0 * math.pi * k / (n - 1)
        worst = max(worst, abs(lobachevsky(x) - lobachevsky_oracle(x, 1e-13)))
    assert worst <= 1e-12


def test_oddness():
    rng = random.Random(10)
    for _ in range(1000):
        x = rng.uniform(-10.0, 10.0)
        assert abs(lobachevsky(-x) + lobachevsky(x)) <= 1e-12


def test_periodicity():
    rng = random.Random(11)
    for _ in range(1000):
        x = rng.uniform(-10.0, 10.0)
        assert abs(lobachevsky(x + math.pi) - lobachevsky(x)) <= 1e-12


def test_duplication_identity():
    rng = random.Random(12)
    for _ in range(1000):
        x = rng.uniform(-10.0, 10.0)
        lhs = lobachevsky(2.0 * x)
        rhs = 2.0 * lobachevsky(x) + 2.0 * lobachevsky(x + math.pi / 2.0)
        assert abs(lhs - rhs) <= 1e-11


def test_bounded_by_maximum():
    for k in range(2001):
        x = -10.0 + 0.01 * k
        assert abs(lobachevsky(x)) <= L_MAX + 1e-15


def test_maximum_located_at_pi_six():
    # coarse grid then ternary refinement
    xs = [k * 1e-3 for k in range(int(math.pi * 1000) + 1)]
    best = max(xs, key=lobachevsky)
    lo, hi = best - 2e-3, best + 2e-3
    for _ in range(80):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if lobachevsky(m1) < lobachevsky(m2):
            lo = m1
        else:
            hi = m2
    assert abs(0.5 * (lo + hi) - math.pi / 6.0) <= 1e-6


def test_oracle_oddness():
    for x in (0.4, 1.9, 7.7):
        assert lobachevsky_oracle(-x) == -lobachevsky_oracle(x)


def test_oracle_full_period_integral_vanishes():
    for k in (1, 2, 3):
        assert abs(lobachevsky_oracle(k * math.pi, 1e-12)) <= 1e-12


def test_oracle_periodicity():
    for x in (0.3, 1.2, 2.8):
        a = lobachevsky_oracle(x, 1e-13)
        b = lobachevsky_oracle(x + math.pi, 1e-13)
        assert abs(a - b) <= 1e-12


def test_argument_just_below_pi():
    # endpoint lands close to the log singularity of the integrand
    x = 3.14159265
    assert abs(lobachevsky(x) - lobachevsky_oracle(x, 1e-13)) <= 1e-12


def test_rejects_non_finite():
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(DomainError):
            lobachevsky(bad)
        with pytest.raises(DomainError):
            lobachevsky_oracle(bad)


def test_oracle_rejects_bad_tolerance():
    with pytest.raises(DomainError):
        lobachevsky_oracle(1.0, 0.0)
    with pytest.raises(DomainError):
        lobachevsky_oracle(1.0, -1e-9)


def test_oracle_unreachable_tolerance():
    with pytest.raises(QuadratureError):
        lobachevsky_oracle(2.9, 1e-30)
