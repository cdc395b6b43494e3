"""Exact-rational truncated power series for return probabilities.

For the simple random walk on Z^d, q_n is the probability of being at the
start after n steps and p_n the probability of returning for the first
time at step n.  The sequences satisfy the convolution

    q_n = sum_{k=0}^n p_k q_{n-k}      (n >= 1),

equivalently P(z) Q(z) = Q(z) - 1 for the ordinary generating functions.
Everything here is computed in exact rational arithmetic; floats appear
only in ogf_eval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError
from .loops import loop_count, _check_dimension, _check_length


@dataclass(frozen=True)
class RationalSeries:
    """A power series truncated at `order`, with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("a series needs at least the order-0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


@dataclass(frozen=True)
class ReturnSequences:
    """The paired p/q truncations for one lattice dimension."""

    d: int
    q: RationalSeries
    p: RationalSeries


def q_sequence(d: int, order: int) -> RationalSeries:
    """q_n = loop_count(d, n) / (2d)^n for n = 0..order."""
    _check_dimension(d)
    _check_length(order)
    base = 2 * d
    coeffs = tuple(Fraction(loop_count(d, n), base**n) for n in range(order + 1))
    return RationalSeries(coeffs)


def p_sequence(d: int, order: int) -> RationalSeries:
    """First-return probabilities via the triangular solve of the convolution.

    p_0 = 0 and, since q_0 = 1,

        p_n = q_n - sum_{k=1}^{n-1} p_k q_{n-k}.
    """
    q = q_sequence(d, order)
    p = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        p[n] = q[n] - sum((p[k] * q[n - k] for k in range(1, n)), Fraction(0))
    return RationalSeries(tuple(p))


def return_sequences(d: int, order: int) -> ReturnSequences:
    return ReturnSequences(d=d, q=q_sequence(d, order), p=p_sequence(d, order))


def cauchy_product(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Coefficientwise product truncated at the shorter order."""
    n_max = min(a.order, b.order)
    coeffs = tuple(
        sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(n_max + 1)
    )
    return RationalSeries(coeffs)


def verify_fundamental_identity(d: int, order: int) -> bool:
    """Check P(z)Q(z) = Q(z) - 1 coefficientwise, exactly, through `order`."""
    q = q_sequence(d, order)
    p = p_sequence(d, order)
    prod = cauchy_product(p, q)
    for n in range(order + 1):
        rhs = q[n] - (1 if n == 0 else 0)
        if prod[n] != rhs:
            return False
    return True


def partial_return_probability(d: int, order: int) -> Fraction:
    """sum_{n<=order} p_n; a lower bound for the return probability."""
    p = p_sequence(d, order)
    return sum(p.coeffs, Fraction(0))


def ogf_eval(series: RationalSeries, z: float) -> float:
    """Evaluate the truncated series at z in [0, 1) by Horner's rule."""
    if not 0.0 <= z < 1.0:
        raise DomainError(f"evaluation point must satisfy 0 <= z < 1, got {z!r}")
    acc = 0.0
    for c in reversed(series.coeffs):
        acc = acc * z + float(c)
    return acc
