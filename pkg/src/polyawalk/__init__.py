"""Exact and numerical analysis of simple random walk recurrence on Z^d.

The package walks through one complete chain of reasoning: exact loop
counts on the lattice, exact first-return/at-origin probability series and
their generating-function identity, modified Bessel evaluation, the
Borel-transform integral for the return generating function with Laplace
asymptotics for its tail, and the resulting recurrence/transience
classification, cross-validated by seeded Monte Carlo simulation.
"""

from .bessel import (
    LaplaceEstimate,
    gaussian_half_integral,
    i0,
    i0_asymptotic,
    i0_integral,
    i0_scaled,
    i_alpha_series,
    laplace_endpoint_estimate,
)
from .borel import (
    Classification,
    QuadratureConfig,
    QuadratureResult,
    abel_scan,
    integrand_asymptotic,
    integrand_log,
    polya_bracket,
    q_integral,
    return_probability,
    tail_power_integral,
)
from .exceptions import (
    DivergentIntegral,
    DomainError,
    EnumerationTooLarge,
    NonConvergence,
    OverflowRisk,
    ToleranceNotMet,
)
from .loops import (
    ENUMERATION_GUARD,
    binomial_convolve,
    brute_force_first_return_count,
    brute_force_loop_count,
    central_binomial,
    indecomposable_count,
    indecomposable_sequence,
    loop_count,
    loop_count_1d,
    loop_sequence,
)
from .series import (
    RationalSeries,
    ReturnSequences,
    cauchy_product,
    ogf_eval,
    p_sequence,
    partial_return_probability,
    q_sequence,
    return_sequences,
    verify_fundamental_identity,
)
from .walk import (
    McEstimate,
    WalkConfig,
    empirical_occupancy,
    estimate_return_probability,
    first_return_time,
    trial_generator,
    wilson_interval,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DivergentIntegral",
    "DomainError",
    "ENUMERATION_GUARD",
    "EnumerationTooLarge",
    "LaplaceEstimate",
    "McEstimate",
    "NonConvergence",
    "OverflowRisk",
    "QuadratureConfig",
    "QuadratureResult",
    "RationalSeries",
    "ReturnSequences",
    "ToleranceNotMet",
    "WalkConfig",
    "abel_scan",
    "binomial_convolve",
    "brute_force_first_return_count",
    "brute_force_loop_count",
    "cauchy_product",
    "central_binomial",
    "empirical_occupancy",
    "estimate_return_probability",
    "first_return_time",
    "gaussian_half_integral",
    "i0",
    "i0_asymptotic",
    "i0_integral",
    "i0_scaled",
    "i_alpha_series",
    "indecomposable_count",
    "indecomposable_sequence",
    "integrand_asymptotic",
    "integrand_log",
    "laplace_endpoint_estimate",
    "loop_count",
    "loop_count_1d",
    "loop_sequence",
    "ogf_eval",
    "p_sequence",
    "partial_return_probability",
    "polya_bracket",
    "q_integral",
    "q_sequence",
    "return_probability",
    "return_sequences",
    "tail_power_integral",
    "trial_generator",
    "verify_fundamental_identity",
    "wilson_interval",
]
