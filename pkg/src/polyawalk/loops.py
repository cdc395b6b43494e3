"""Exact loop counting on the integer lattice Z^d.

A loop of length n is a walk of n unit steps that starts and ends at the
same point; the length-0 loop is the trivial loop.  An indecomposable loop
is a non-trivial loop that never revisits its basepoint before its final
step.  All counts are exact Python integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from .exceptions import DomainError, EnumerationTooLarge

# Hard cap on (2d)^n step sequences for the enumeration oracles; keeps a
# single oracle run under about a minute of pure-Python iteration.
ENUMERATION_GUARD = 10**8


def _check_dimension(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"dimension must be an integer >= 1, got {d!r}")


def _check_length(n: int, minimum: int = 0) -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"walk length must be an integer >= {minimum}, got {n!r}")


def central_binomial(k: int) -> int:
    """C(2k, k), the number of length-2k loops on Z."""
    _check_length(k)
    return comb(2 * k, k)


def loop_count_1d(n: int) -> int:
    """Loops of length n on Z: C(n, n/2) for even n, 0 for odd n."""
    _check_length(n)
    if n % 2:
        return 0
    return comb(n, n // 2)


def binomial_convolve(a: list[int], b: list[int]) -> list[int]:
    """Binomial (shuffle) convolution c_n = sum_k C(n,k) a_k b_{n-k}.

    Shuffling a length-k walk on one axis set with a length-(n-k) walk on a
    disjoint axis set multiplies counts by the C(n,k) interleavings.
    """
    n_max = min(len(a), len(b)) - 1
    return [
        sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1))
        for n in range(n_max + 1)
    ]


@lru_cache(maxsize=None)
def _loop_row(d: int, n_max: int) -> tuple[int, ...]:
    row1 = [loop_count_1d(n) for n in range(n_max + 1)]
    row = row1
    for _ in range(d - 1):
        row = binomial_convolve(row, row1)
    return tuple(row)


def loop_count(d: int, n: int) -> int:
    """Loops of length n on Z^d, by d-1 binomial convolutions of the 1-D row."""
    _check_dimension(d)
    _check_length(n)
    return _loop_row(d, n)[n]


@lru_cache(maxsize=None)
def _indecomposable_row(d: int, n_max: int) -> tuple[int, ...]:
    # Invert loops_n = sum_{k=0}^n r_k loops_{n-k}, with loops_0 = 1, r_0 = 0:
    # every non-trivial loop splits uniquely at its first basepoint revisit.
    loops = _loop_row(d, n_max)
    r = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        r[n] = loops[n] - sum(r[k] * loops[n - k] for k in range(1, n))
    return tuple(r)


def indecomposable_count(d: int, n: int) -> int:
    """Indecomposable (first-return) loops of length n >= 1 on Z^d."""
    _check_dimension(d)
    _check_length(n, minimum=1)
    return _indecomposable_row(d, n)[n]


def loop_sequence(d: int, n_max: int) -> list[int]:
    """Loop counts for lengths 0..n_max."""
    _check_dimension(d)
    _check_length(n_max)
    return list(_loop_row(d, n_max))


def indecomposable_sequence(d: int, n_max: int) -> list[int]:
    """Indecomposable loop counts for lengths 0..n_max (index 0 is 0)."""
    _check_dimension(d)
    _check_length(n_max)
    return list(_indecomposable_row(d, n_max))


def _check_enumeration_size(d: int, n: int) -> None:
    if (2 * d) ** n > ENUMERATION_GUARD:
        raise EnumerationTooLarge(
            f"(2*{d})^{n} step sequences exceed the guard of {ENUMERATION_GUARD}"
        )


def _moves(d: int) -> list[tuple[int, int]]:
    return [(axis, sign) for axis in range(d) for sign in (1, -1)]


def brute_force_loop_count(d: int, n: int) -> int:
    """Oracle: count closed length-n walks by trying every step sequence."""
    _check_dimension(d)
    _check_length(n)
    _check_enumeration_size(d, n)
    count = 0
    for seq in itertools.product(_moves(d), repeat=n):
        pos = [0] * d
        for axis, sign in seq:
            pos[axis] += sign
        if not any(pos):
            count += 1
    return count


def brute_force_first_return_count(d: int, n: int) -> int:
    """Oracle: count length-n walks whose first basepoint revisit is step n."""
    _check_dimension(d)
    _check_length(n, minimum=1)
    _check_enumeration_size(d, n)
    count = 0
    for seq in itertools.product(_moves(d), repeat=n):
        pos = [0] * d
        returned_early = False
        for i, (axis, sign) in enumerate(seq, start=1):
            pos[axis] += sign
            if i < n and not any(pos):
                returned_early = True
                break
        if not returned_early and not any(pos):
            count += 1
    return count
