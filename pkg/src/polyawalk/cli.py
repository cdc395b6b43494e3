"""Command-line interface: every computation as a subcommand emitting CSV.

Output is deterministic for fixed flags (including the Monte Carlo seed):
rows are written with '\n' terminators, '.' decimal points, and floats in
shortest round-trip form, so repeated runs are byte-identical.

Exit codes: 0 success, 1 usage error, 2 domain error (such as a divergent
integral), 3 tolerance or convergence failure.
"""

from __future__ import annotations

import csv
import sys
from fractions import Fraction

import click

from . import bessel, borel, loops, series, walk
from .exceptions import (
    DivergentIntegral,
    DomainError,
    EnumerationTooLarge,
    NonConvergence,
    OverflowRisk,
    ToleranceNotMet,
)

_DEFAULT_ORDER = 64
_DEFAULT_SEED = 20260810
_BESSEL_GRID = [0.5 * k for k in range(1, 41)]


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def _emit(header: list[str], rows: list[list], out: str | None) -> None:
    def write(stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])

    if out is None:
        write(sys.stdout)
    else:
        with open(out, "w", newline="", encoding="ascii") as fh:
            write(fh)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise click.UsageError(message)


def _quad_config(tol: float, split: float | None) -> borel.QuadratureConfig:
    _require(tol > 0, "--tol must be > 0")
    _require(split is None or split > 0, "--split must be > 0")
    return borel.QuadratureConfig(split_point=split, abs_tol=tol)


@click.group()
def cli() -> None:
    """Lattice random walk toolkit: exact loop counts, return-probability
    series, Bessel evaluations, the Borel-transform integral, and Monte
    Carlo cross-checks."""


@cli.command("loops")
@click.option("--d", type=int, default=1, show_default=True, help="Lattice dimension.")
@click.option("--max-n", type=int, default=16, show_default=True,
              help="Largest loop length to tabulate.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write CSV here instead of stdout.")
def loops_cmd(d: int, max_n: int, out: str | None) -> None:
    """Exact loop and first-return loop counts (even lengths)."""
    _require(d >= 1, "--d must be >= 1")
    _require(max_n >= 0, "--max-n must be >= 0")
    totals = loops.loop_sequence(d, max_n)
    firsts = loops.indecomposable_sequence(d, max_n)
    rows = [[n, totals[n], firsts[n]] for n in range(0, max_n + 1, 2)]
    _emit(["n", "loops", "indecomposable"], rows, out)


@cli.command("series")
@click.option("--d", type=int, default=1, show_default=True, help="Lattice dimension.")
@click.option("--max-n", type=int, default=_DEFAULT_ORDER, show_default=True,
              help="Truncation order of the series.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def series_cmd(d: int, max_n: int, out: str | None) -> None:
    """First-return (p_n) and at-origin (q_n) probabilities with partial sums."""
    _require(d >= 1, "--d must be >= 1")
    _require(max_n >= 0, "--max-n must be >= 0")
    seqs = series.return_sequences(d, max_n)
    rows = []
    partial = Fraction(0)
    for n in range(max_n + 1):
        partial += seqs.p[n]
        rows.append([n, seqs.p[n], float(seqs.p[n]), seqs.q[n], float(seqs.q[n]),
                     partial, float(partial)])
    _emit(
        ["n", "p", "p_decimal", "q", "q_decimal", "p_partial_sum",
         "p_partial_sum_decimal"],
        rows, out,
    )


@cli.command("bessel")
@click.option("--x", "xs", type=float, multiple=True,
              help="Evaluation points (repeatable); default grid 0.5..20.")
@click.option("--tol", type=float, default=1e-15, show_default=True,
              help="Relative tolerance of the series summation.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def bessel_cmd(xs: tuple[float, ...], tol: float, out: str | None) -> None:
    """I_0 by series, by integral, and by the endpoint asymptotic."""
    _require(tol > 0, "--tol must be > 0")
    grid = list(xs) if xs else _BESSEL_GRID
    _require(all(x >= 0 for x in grid), "--x must be >= 0")
    rows = []
    for x in grid:
        s = bessel.i_alpha_series(0, x, tol)
        integral = bessel.i0_integral(x)
        asym = bessel.i0_asymptotic(x) if x > 0 else None
        rows.append([x, s, integral, asym,
                     s / integral,
                     integral / asym if asym else None])
    _emit(
        ["x", "series", "integral", "asymptotic", "series_over_integral",
         "integral_over_asymptotic"],
        rows, out,
    )


@cli.command()
@click.option("--d", type=int, default=3, show_default=True, help="Lattice dimension.")
@click.option("--z", type=float, default=1.0, show_default=True,
              help="Argument of Q; z = 1 requires d >= 3.")
@click.option("--tol", type=float, default=1e-6, show_default=True,
              help="Absolute tolerance of the head quadrature.")
@click.option("--split", type=float, default=None,
              help="Head/tail split point (default max(50 d, 200)).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def qintegral(d: int, z: float, tol: float, split: float | None,
              out: str | None) -> None:
    """The return generating function Q(z) as an improper integral."""
    _require(d >= 1, "--d must be >= 1")
    _require(0.0 <= z <= 1.0, "--z must lie in [0, 1]")
    result = borel.q_integral(z, d, _quad_config(tol, split))
    _emit(
        ["z", "value", "error_estimate", "evaluations"],
        [[z, result.value, result.error_estimate, result.evaluations]],
        out,
    )


@cli.command()
@click.option("--d", type=int, default=3, show_default=True, help="Lattice dimension.")
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.option("--split", type=float, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def polya(d: int, tol: float, split: float | None, out: str | None) -> None:
    """Recurrence/transience classification with the return probability."""
    _require(d >= 1, "--d must be >= 1")
    cfg = _quad_config(tol, split)
    classification = borel.return_probability(d, cfg)
    if classification.kind == "transient":
        result = borel.q_integral(1.0, d, cfg)
        error = result.error_estimate / result.value**2
        row = [d, classification.kind, classification.return_probability, error]
    else:
        row = [d, classification.kind, None, None]
    _emit(["d", "classification", "return_probability", "error_estimate"],
          [row], out)


@cli.command()
@click.option("--d", type=int, default=3, show_default=True, help="Lattice dimension.")
@click.option("--trials", type=int, default=10000, show_default=True)
@click.option("--horizon", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=_DEFAULT_SEED, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def mc(d: int, trials: int, horizon: int, seed: int, out: str | None) -> None:
    """Monte Carlo estimate of the return probability."""
    _require(d >= 1, "--d must be >= 1")
    _require(trials >= 1, "--trials must be >= 1")
    _require(horizon >= 2, "--horizon must be >= 2")
    _require(0 <= seed < 2**64, "--seed must fit in 64 bits")
    cfg = walk.WalkConfig(d=d, horizon=horizon, trials=trials, seed=seed)
    est = walk.estimate_return_probability(cfg)
    click.echo(
        "note: p_hat counts returns within --horizon only and so "
        "lower-bounds the true return probability",
        err=True,
    )
    _emit(
        ["d", "trials", "horizon", "seed", "p_hat", "ci_low", "ci_high"],
        [[d, est.trials, est.horizon, seed, est.p_hat, est.ci_low, est.ci_high]],
        out,
    )


@cli.command()
@click.option("--d", type=int, default=3, show_default=True, help="Lattice dimension.")
@click.option("--max-n", type=int, default=_DEFAULT_ORDER, show_default=True,
              help="Series truncation for the bracket.")
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.option("--split", type=float, default=None)
@click.option("--trials", type=int, default=10000, show_default=True)
@click.option("--horizon", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=_DEFAULT_SEED, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def compare(d: int, max_n: int, tol: float, split: float | None, trials: int,
            horizon: int, seed: int, out: str | None) -> None:
    """Quadrature value vs exact series bracket vs Monte Carlo interval."""
    _require(d >= 1, "--d must be >= 1")
    _require(max_n >= 0, "--max-n must be >= 0")
    _require(trials >= 1, "--trials must be >= 1")
    _require(horizon >= 2, "--horizon must be >= 2")
    cfg = _quad_config(tol, split)
    classification = borel.return_probability(d, cfg)
    if classification.kind == "transient":
        result = borel.q_integral(1.0, d, cfg)
        p_quad = 1.0 - 1.0 / result.value
        p_err = result.error_estimate / result.value**2
        lo, hi = borel.polya_bracket(d, order=max_n, cfg=cfg)
    else:
        p_quad = p_err = lo = hi = None
    est = walk.estimate_return_probability(
        walk.WalkConfig(d=d, horizon=horizon, trials=trials, seed=seed)
    )
    _emit(
        ["d", "classification", "p_quadrature", "p_error", "bracket_low",
         "bracket_high", "mc_p_hat", "mc_ci_low", "mc_ci_high", "trials",
         "horizon", "seed"],
        [[d, classification.kind, p_quad, p_err, lo, hi, est.p_hat, est.ci_low,
          est.ci_high, trials, horizon, seed]],
        out,
    )


def main(argv: list[str] | None = None) -> int:
    """Dispatch with the documented exit codes; returns instead of exiting."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except (DomainError, DivergentIntegral, OverflowRisk, EnumerationTooLarge) as exc:
        click.echo(f"domain error: {exc}", err=True)
        return 2
    except (ToleranceNotMet, NonConvergence) as exc:
        click.echo(f"tolerance error: {exc}", err=True)
        return 3


def entry_point() -> None:
    sys.exit(main())
