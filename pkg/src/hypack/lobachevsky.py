"""The Lobachevsky function and an independent quadrature oracle.

    L(x) = -Integral_0^x log|2 sin t| dt

L is odd, pi-periodic and attains its maximum at pi/6; it is the only
special function needed by the closed-form volume of hyperbolic
orthoschemes.

Primary evaluation reduces the argument modulo pi to [-pi/2, pi/2] and
splits off the closed-form piece th*(1 - log(2*th)) coming from the
logarithmic singularity of the integrand.  The remainder

    Integral_0^th log(sin t / t) dt = -sum_{k>=1} zeta(2k) th^(2k+1) / (k (2k+1) pi^(2k))

is a power series in (th/pi)^2 that converges geometrically on the
reduced range (ratio <= 1/4), so ~30 terms give full double precision.

`lobachevsky_oracle` integrates the defining integral with QUADPACK
instead and shares no code with the series path; it exists purely to
cross-check the primary evaluation.
"""

from __future__ import annotations

import math
import warnings

from scipy.integrate import IntegrationWarning, quad
from scipy.special import zeta

from .errors import DomainError, QuadratureError

_ZETA_EVEN = tuple(float(zeta(2 * k)) for k in range(1, 41))


def lobachevsky(x: float) -> float:
    """Evaluate L(x) to about 1e-14 absolute accuracy for any finite x."""
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x}")
    th = math.remainder(x, math.pi)  # exact reduction into [-pi/2, pi/2]
    if th == 0.0:
        return 0.0
    sign = 1.0 if th > 0.0 else -1.0
    th = abs(th)
    acc = th - th * math.log(2.0 * th)
    power = th
    ratio = (th / math.pi) ** 2
    for k, z in enumerate(_ZETA_EVEN, start=1):
        power *= ratio
        term = z * power / (k * (2 * k + 1))
        acc += term
        if term < 1e-18:
            break
    return sign * acc


def _neg_log_2sin(t: float) -> float:
    return -math.log(abs(2.0 * math.sin(t)))


def lobachevsky_oracle(x: float, abs_tol: float = 1e-13) -> float:
    """Evaluate L(x) by adaptive quadrature of the defining integral.

    The integration range is split at every multiple of pi so that the
    logarithmic zeros of the integrand sit at piece endpoints, where the
    extrapolating integrator handles them well.  When x falls in the
    second half of a period the final piece is integrated from the far
    endpoint and subtracted, again keeping singularities at endpoints.

    Raises QuadratureError when the accumulated error estimate exceeds
    abs_tol.
    """
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x}")
    if not abs_tol > 0.0:
        raise DomainError("abs_tol must be positive")
    if x == 0.0:
        return 0.0
    sign = 1.0
    if x < 0.0:
        # the integrand is even, so the integral is odd
        sign, x = -1.0, -x

    whole = int(math.floor(x / math.pi))
    frac = x - whole * math.pi
    pieces: list[tuple[float, float, float]] = []  # (lo, hi, weight)
    for i in range(whole):
        pieces.append((i * math.pi, (i + 1) * math.pi, 1.0))
    if frac > 0.5 * math.pi:
        pieces.append((whole * math.pi, (whole + 1) * math.pi, 1.0))
        pieces.append((x, (whole + 1) * math.pi, -1.0))
    elif frac > 0.0:
        pieces.append((whole * math.pi, x, 1.0))

    per_piece = abs_tol / (2.0 * max(1, len(pieces)))
    total = 0.0
    err_est = 0.0
    with warnings.catch_warnings():
        # rely on the accumulated error estimate, not QUADPACK's warning
        warnings.simplefilter("ignore", IntegrationWarning)
        for lo, hi, weight in pieces:
            val, err = quad(_neg_log_2sin, lo, hi, epsabs=per_piece,
                            epsrel=0.0, limit=500)
            total += weight * val
            err_est += err
    if err_est > abs_tol:
        raise QuadratureError(
            f"estimated error {err_est:.3e} exceeds requested {abs_tol:.3e}"
        )
    return sign * total


#: Global maximum of |L|, attained at pi/6.
L_MAX = lobachevsky(math.pi / 6.0)
