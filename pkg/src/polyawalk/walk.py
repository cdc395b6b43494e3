"""Seeded Monte Carlo simulation of the simple random walk on Z^d.

Each trial walks up to `horizon` steps and records whether (and when) it
first revisits its starting point.  Reproducibility contract: trial t of a
run with seed s draws from the counter-based Philox stream keyed by
(s, t), so results do not depend on execution order, batching, or the
number of worker processes, and shortening or lengthening the horizon
replays the same step prefix per trial.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox

from .exceptions import DomainError
from .loops import _check_dimension

# z for a two-sided 95% normal interval
_Z95 = 1.959963984540054

_FIRST_CHUNK = 4096
_CHUNK_GROWTH = 4
# Trials cheaper than this run serially; beyond it they are sharded across
# processes (the per-trial streams make the split order-insensitive).
_PARALLEL_THRESHOLD = 5 * 10**7


@dataclass(frozen=True)
class WalkConfig:
    d: int
    horizon: int
    trials: int
    seed: int

    def __post_init__(self) -> None:
        _check_dimension(self.d)
        if self.horizon < 2:
            raise DomainError(f"horizon must be >= 2, got {self.horizon!r}")
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials!r}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must fit in 64 bits, got {self.seed!r}")


@dataclass(frozen=True)
class McEstimate:
    """Empirical return probability with a Wilson 95% interval.

    p_hat counts returns no later than `horizon`, so it is a lower bound
    for the true return probability; the unobserved tail is the mass of
    first returns beyond the horizon.
    """

    p_hat: float
    ci_low: float
    ci_high: float
    trials: int
    horizon: int


def trial_generator(seed: int, trial: int) -> Generator:
    """The Philox stream for one trial: 128-bit key = (seed, trial index)."""
    return Generator(Philox(key=(seed << 64) | trial))


def wilson_interval(successes: int, trials: int) -> tuple[float, float]:
    """Wilson score 95% interval; well behaved even at 0 or all successes."""
    if trials < 1 or not 0 <= successes <= trials:
        raise DomainError(f"bad counts: {successes}/{trials}")
    n = float(trials)
    p = successes / n
    z2 = _Z95 * _Z95
    denom = 1.0 + z2 / n
    center = (p + z2 / (2.0 * n)) / denom
    half = _Z95 * math.sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _step_table(d: int, encoded: bool) -> np.ndarray:
    """Displacements for the 2d directions, index k -> axis k>>1, sign by k&1.

    In encoded form each axis occupies a 21-bit field of one int64, so a
    single cumulative sum tracks the full position and the walk is at the
    origin exactly when the encoded value is 0.  Valid while every
    coordinate stays below 2^20 in absolute value, i.e. horizon < 2^20.
    """
    if encoded:
        table = np.zeros(2 * d, dtype=np.int64)
        for axis in range(d):
            table[2 * axis] = np.int64(1) << np.int64(21 * axis)
            table[2 * axis + 1] = -table[2 * axis]
        return table
    table = np.zeros((2 * d, d), dtype=np.int64)
    for axis in range(d):
        table[2 * axis, axis] = 1
        table[2 * axis + 1, axis] = -1
    return table


def _use_encoding(d: int, horizon: int) -> bool:
    return d <= 3 and horizon < 2**20


def _scan_first_return(table: np.ndarray, encoded: bool, two_d: int,
                       horizon: int, rng: Generator) -> int | None:
    """First step in [1, horizon] at which the walk is back at the origin."""
    offset = None
    done = 0
    chunk = _FIRST_CHUNK
    while done < horizon:
        m = min(chunk, horizon - done)
        # uint32 draws consume whole stream words per value, so splitting the
        # horizon into chunks (or shortening it) replays the same steps;
        # sub-word dtypes buffer within a call and break that replay.
        draws = rng.integers(0, two_d, size=m, dtype=np.uint32)
        if encoded:
            pos = np.cumsum(table[draws])
        else:
            pos = np.cumsum(table[draws], axis=0)
        if offset is not None:
            pos += offset
        if encoded:
            hits = pos == 0
        else:
            hits = ~pos.any(axis=1)
        if hits.any():
            return done + int(np.argmax(hits)) + 1
        offset = pos[-1]
        done += m
        chunk *= _CHUNK_GROWTH
    return None


def first_return_time(d: int, horizon: int, rng: Generator) -> int | None:
    """First return step of a single walk driven by `rng`, or None if the
    walk stays away from the origin through the horizon.  Any returned
    value is even: an odd number of unit steps cannot cancel."""
    _check_dimension(d)
    if horizon < 2:
        raise DomainError(f"horizon must be >= 2, got {horizon!r}")
    encoded = _use_encoding(d, horizon)
    table = _step_table(d, encoded)
    return _scan_first_return(table, encoded, 2 * d, horizon, rng)


def _count_returns(cfg: WalkConfig, start: int, stop: int) -> int:
    encoded = _use_encoding(cfg.d, cfg.horizon)
    table = _step_table(cfg.d, encoded)
    two_d = 2 * cfg.d
    count = 0
    for trial in range(start, stop):
        rng = trial_generator(cfg.seed, trial)
        if _scan_first_return(table, encoded, two_d, cfg.horizon, rng) is not None:
            count += 1
    return count


def estimate_return_probability(cfg: WalkConfig,
                                workers: int | None = None) -> McEstimate:
    """Fraction of trials that return within the horizon, with Wilson CI.

    `workers=None` picks a process count from the workload size; any value
    yields bitwise-identical results because trial streams are keyed by
    (seed, trial) alone and only counts are reduced.
    """
    if workers is None:
        heavy = cfg.trials * cfg.horizon >= _PARALLEL_THRESHOLD
        workers = min(os.cpu_count() or 1, 8) if heavy else 1
    if workers <= 1 or cfg.trials < 2 * workers:
        returned = _count_returns(cfg, 0, cfg.trials)
    else:
        bounds = np.linspace(0, cfg.trials, workers + 1, dtype=int)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_count_returns, [cfg] * workers, bounds[:-1], bounds[1:])
            returned = sum(parts)
    p_hat = returned / cfg.trials
    lo, hi = wilson_interval(returned, cfg.trials)
    return McEstimate(p_hat=p_hat, ci_low=lo, ci_high=hi,
                      trials=cfg.trials, horizon=cfg.horizon)


def empirical_occupancy(cfg: WalkConfig, n: int) -> float:
    """Fraction of trials located at the origin at step n (exactly, not
    'by step n'); the empirical counterpart of the at-origin probability."""
    if not 0 <= n <= cfg.horizon:
        raise DomainError(f"need 0 <= n <= horizon, got n={n!r}")
    if n == 0:
        return 1.0
    encoded = _use_encoding(cfg.d, n)
    table = _step_table(cfg.d, encoded)
    two_d = 2 * cfg.d
    at_origin = 0
    for trial in range(cfg.trials):
        rng = trial_generator(cfg.seed, trial)
        draws = rng.integers(0, two_d, size=n, dtype=np.uint32)
        if encoded:
            if int(table[draws].sum()) == 0:
                at_origin += 1
        else:
            if not table[draws].sum(axis=0).any():
                at_origin += 1
    return at_origin / cfg.trials
