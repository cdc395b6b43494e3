"""Modified Bessel function of the first kind, I_alpha.

Three mutually checking evaluation routes are provided:

  * the power series  I_alpha(x) = sum_k (x/2)^{2k+alpha} / (k! Gamma(k+alpha+1)),
  * the integral      I_0(x) = (1/pi) * integral_0^pi exp(x cos(theta)) dtheta
    together with its exponentially scaled form exp(-x) I_0(x),
  * the leading endpoint (Laplace) asymptotic exp(x)/sqrt(2 pi x).

Orders are restricted to integers and half-integers so that every gamma
factor is an exact factorial or a closed form; no general log-gamma is
needed.  Anything of the form exp(big) * small is handled in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial.legendre import leggauss

from .exceptions import DomainError, NonConvergence, OverflowRisk

# exp(x) overflows double precision just above x = 709.
UNSCALED_LIMIT = 700.0
# Below this the floating series is accurate; above it the scaled integral
# representation is better conditioned.
SERIES_LIMIT = 20.0

_SERIES_TERM_CAP = 500
_QUAD_REL_TOL = 1e-12
_QUAD_NODE_CAP = 2**14

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _GL_CACHE:
        _GL_CACHE[n] = leggauss(n)
    return _GL_CACHE[n]


def _gauss_doubling(f, a: float, b: float) -> float:
    """Gauss-Legendre on [a, b], doubling the node count until two successive
    evaluations agree to _QUAD_REL_TOL relative (node cap _QUAD_NODE_CAP)."""
    prev = None
    n = 16
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    while n <= _QUAD_NODE_CAP:
        nodes, weights = _gl_rule(n)
        val = half * float(np.dot(weights, f(half * nodes + mid)))
        if prev is not None and abs(val - prev) <= _QUAD_REL_TOL * max(abs(val), 1e-300):
            return val
        prev = val
        n *= 2
    return prev


def _check_order(alpha) -> Fraction:
    a = Fraction(alpha)
    if a < 0 or (2 * a).denominator != 1:
        raise DomainError(
            f"order must be a nonnegative integer or half-integer, got {alpha!r}"
        )
    return a


def _gamma_exact(x: Fraction) -> float:
    """Gamma(x) for positive integer or half-integer x, via exact factorials.

    Gamma(m) = (m-1)!  and  Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!).
    """
    if x.denominator == 1:
        return float(math.factorial(x.numerator - 1))
    m = (x - Fraction(1, 2)).numerator
    return math.sqrt(math.pi) * math.factorial(2 * m) / (4**m * math.factorial(m))


def i_alpha_series(alpha, x: float, tol: float = 1e-15) -> float:
    """Sum the power series for I_alpha(x), stopping once the next term drops
    below tol times the partial sum."""
    a = _check_order(alpha)
    if x < 0:
        raise DomainError(f"argument must be >= 0, got {x!r}")
    if tol <= 0:
        raise DomainError(f"tolerance must be > 0, got {tol!r}")
    if x == 0.0:
        return 1.0 if a == 0 else 0.0
    af = float(a)
    term = (0.5 * x) ** af / _gamma_exact(a + 1)
    total = term
    ratio_base = 0.25 * x * x
    for k in range(_SERIES_TERM_CAP):
        term *= ratio_base / ((k + 1) * (k + 1 + af))
        total += term
        if not math.isfinite(total):
            raise NonConvergence(
                f"series overflowed at x={x}; use a scaled representation"
            )
        if term < tol * total:
            return total
    raise NonConvergence(f"series needed more than {_SERIES_TERM_CAP} terms at x={x}")


def i0_integral(x: float) -> float:
    """I_0(x) = (1/pi) * integral_0^pi exp(x cos(theta)) dtheta, unscaled."""
    if x < 0:
        raise DomainError(f"argument must be >= 0, got {x!r}")
    if x > UNSCALED_LIMIT:
        raise OverflowRisk(f"exp({x} cos(theta)) overflows; use i0_scaled")
    return _gauss_doubling(lambda t: np.exp(x * np.cos(t)), 0.0, math.pi) / math.pi


def i0_scaled(x: float) -> float:
    """exp(-x) I_0(x) = (1/pi) * integral_0^pi exp(x (cos(theta) - 1)) dtheta.

    The integrand lies in (0, 1] for every x, so this is stable without any
    argument limit.  Two conditioning details: cos(theta) - 1 is computed as
    -2 sin^2(theta/2) to avoid cancellation, and for large x the interval is
    truncated where the integrand has underflowed to zero (theta ~ 40/sqrt(x))
    so the node budget concentrates on the surviving peak.
    """
    if x < 0:
        raise DomainError(f"argument must be >= 0, got {x!r}")
    if x == 0.0:
        return 1.0

    def integrand(theta: np.ndarray) -> np.ndarray:
        s = np.sin(0.5 * theta)
        return np.exp(-2.0 * x * s * s)

    upper = math.pi if x <= 100.0 else min(math.pi, 40.0 / math.sqrt(x))
    return _gauss_doubling(integrand, 0.0, upper) / math.pi


def i0(x: float) -> float:
    """I_0(x) by the best-conditioned route: series for x <= 20, otherwise the
    scaled integral recombined with exp(x)."""
    if x < 0:
        raise DomainError(f"argument must be >= 0, got {x!r}")
    if x <= SERIES_LIMIT:
        return i_alpha_series(0, x)
    if x > UNSCALED_LIMIT:
        raise OverflowRisk(f"I_0({x}) overflows double precision; use i0_scaled")
    return i0_scaled(x) * math.exp(x)


def i0_asymptotic(x: float) -> float:
    """Leading endpoint asymptotic exp(x)/sqrt(2 pi x).

    Computed in log space; for x > 700 the value itself is not representable,
    so the natural log of the estimate is returned instead.
    """
    if x <= 0:
        raise DomainError(f"argument must be > 0, got {x!r}")
    log_value = x - 0.5 * math.log(2.0 * math.pi * x)
    if x > UNSCALED_LIMIT:
        return log_value
    return math.exp(log_value)


def gaussian_half_integral(c: float, t: float) -> float:
    """integral_0^inf exp(-t c theta^2 / 2) dtheta = sqrt(pi / (2 t c))."""
    if c <= 0 or t <= 0:
        raise DomainError(f"need c > 0 and t > 0, got c={c!r}, t={t!r}")
    return math.sqrt(math.pi / (2.0 * t * c))


@dataclass(frozen=True)
class LaplaceEstimate:
    """Data for the endpoint Laplace approximation of integral_0^pi exp(t f(theta)) dtheta
    when f is maximized at theta = 0: f0 = f(0), f2 = |f''(0)| > 0, t > 0."""

    f0: float
    f2: float
    t: float

    def __post_init__(self) -> None:
        if self.f2 <= 0:
            raise DomainError(f"|f''(0)| must be > 0, got {self.f2!r}")
        if self.t <= 0:
            raise DomainError(f"large parameter must be > 0, got {self.t!r}")


def laplace_endpoint_estimate(estimate: LaplaceEstimate) -> float:
    """exp(t f0) * sqrt(pi / (2 t |f''(0)|)); the log of the estimate is
    returned when t*f0 > 700 and the value would overflow."""
    exponent = estimate.t * estimate.f0
    half_gauss = gaussian_half_integral(estimate.f2, estimate.t)
    if exponent > UNSCALED_LIMIT:
        return exponent + math.log(half_gauss)
    return math.exp(exponent) * half_gauss
