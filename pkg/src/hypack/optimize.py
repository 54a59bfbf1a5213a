"""Golden-section maximization of the packing density over p.

The density is smooth and unimodal on (6, infinity), rising to a single
maximum shortly after 6 and decaying to zero, so a derivative-free
bracketing search is both robust and exact to the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError
from .tetrahedron import density

DEFAULT_BRACKET = (6.01, 8.0)
DEFAULT_TOL = 1e-7

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizationResult:
    p_opt: float
    delta_opt: float
    iterations: int
    bracket: tuple[float, float]


@dataclass(frozen=True)
class MonotonicityReport:
    """Signs of successive differences of the objective along a grid."""

    grid: tuple[float, ...]
    values: tuple[float, ...]
    diff_signs: tuple[int, ...]

    def transitions(self) -> tuple[int, ...]:
        """Indices i where diff_signs[i] != diff_signs[i+1]."""
        return tuple(
            i
            for i in range(len(self.diff_signs) - 1)
            if self.diff_signs[i] != self.diff_signs[i + 1]
        )

    def is_unimodal(self) -> bool:
        """Exactly one sign change, from rising to falling, no flats."""
        if any(s == 0 for s in self.diff_signs):
            return False
        t = self.transitions()
        if len(t) != 1:
            return False
        k = t[0]
        return self.diff_signs[k] > 0 > self.diff_signs[k + 1]

    def peak_interval(self) -> tuple[float, float]:
        """Grid interval bracketing the maximum of a unimodal pattern."""
        if not self.is_unimodal():
            raise ValueError("sign pattern is not unimodal")
        k = self.transitions()[0]
        return (self.grid[k], self.grid[k + 2])

    def argmax_point(self) -> float:
        return self.grid[max(range(len(self.values)), key=self.values.__getitem__)]


def _delta(p: float) -> float:
    return density(p).delta


def maximize(
    lo: float = DEFAULT_BRACKET[0],
    hi: float = DEFAULT_BRACKET[1],
    tol: float = DEFAULT_TOL,
    fn: Callable[[float], float] | None = None,
) -> OptimizationResult:
    """Locate the maximum of a unimodal function on [lo, hi].

    Golden-section search: deterministic, derivative-free, final bracket
    width <= tol.  By default the objective is the packing density.
    """
    if not (6.0 < lo < hi):
        raise DomainError(f"invalid bracket: need 6 < lo < hi, got ({lo}, {hi})")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    f = fn if fn is not None else _delta
    a, b = lo, hi
    c = b - (b - a) * _INVPHI
    d = a + (b - a) * _INVPHI
    fc, fd = f(c), f(d)
    iterations = 0
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INVPHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INVPHI
            fd = f(d)
        iterations += 1
    p_opt = 0.5 * (a + b)
    return OptimizationResult(
        p_opt=p_opt, delta_opt=f(p_opt), iterations=iterations, bracket=(a, b)
    )


def monotonicity_scan(
    grid: Sequence[float],
    fn: Callable[[float], float] | None = None,
) -> MonotonicityReport:
    """Evaluate the objective along a sorted grid and report diff signs."""
    pts = tuple(float(g) for g in grid)
    if len(pts) < 2:
        raise DomainError("grid needs at least two points")
    if any(x >= y for x, y in zip(pts, pts[1:])):
        raise DomainError("grid must be strictly increasing")
    if pts[0] <= 6.0:
        raise DomainError("grid entries must be > 6")
    f = fn if fn is not None else _delta
    values = tuple(f(p) for p in pts)
    signs = tuple(
        1 if y > x else (-1 if y < x else 0) for x, y in zip(values, values[1:])
    )
    return MonotonicityReport(grid=pts, values=values, diff_signs=signs)
