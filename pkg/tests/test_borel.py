import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss

from polyawalk import (
    QuadratureConfig,
    abel_scan,
    i_alpha_series,
    integrand_asymptotic,
    integrand_log,
    ogf_eval,
    partial_return_probability,
    polya_bracket,
    q_integral,
    q_sequence,
    return_probability,
    tail_power_integral,
)
from polyawalk.exceptions import DivergentIntegral, DomainError, ToleranceNotMet

# reference values cross-checked against the exact-series bracket below
Q_ONE = {3: 1.516386059151978, 4: 1.239467121848482,
         5: 1.156308124840231, 6: 1.116963373226672}


def test_integrand_log_trivial_points():
    for d in (1, 2, 3):
        assert integrand_log(0.0, 0.7, d) == 0.0
        for t in (0.5, 3.0, 10.0):
            assert integrand_log(t, 0.0, d) == -t


def test_integrand_log_matches_direct_product():
    # at small t the unscaled product I_0(tz/d)^d e^{-t} is computable directly
    t, z, d = 10.0, 1.0, 3
    direct = i_alpha_series(0, t * z / d) ** 3 * math.exp(-t)
    assert math.exp(integrand_log(t, z, d)) == pytest.approx(direct, rel=1e-12)


def test_integrand_log_never_overflows():
    for t in (1e3, 1e6, 1e12):
        value = integrand_log(t, 1.0, 3)
        assert math.isfinite(value)
        assert math.exp(value) >= 0.0


def test_integrand_asymptotic_constant_2d():
    for t in (1.0, 7.0, 100.0):
        assert integrand_asymptotic(t, 1.0, 2) == pytest.approx(1.0 / (math.pi * t), rel=1e-14)


def test_integrand_asymptotic_ratio():
    t = 1e4
    ratio = math.exp(integrand_log(t, 1.0, 3)) / integrand_asymptotic(t, 1.0, 3)
    assert 0.99 <= ratio <= 1.01


def test_integrand_asymptotic_ratio_monotone():
    ratios = [
        math.exp(integrand_log(t, 1.0, 3)) / integrand_asymptotic(t, 1.0, 3)
        for t in (1e2, 1e3, 1e4)
    ]
    assert all(r > 1.0 for r in ratios)
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


def test_tail_power_integral_values():
    assert tail_power_integral(100.0, 3) == pytest.approx(0.2, rel=1e-15)
    assert tail_power_integral(100.0, 4) == pytest.approx(0.01, rel=1e-15)
    assert math.isinf(tail_power_integral(100.0, 1))
    assert math.isinf(tail_power_integral(100.0, 2))


@pytest.mark.parametrize("d", [3, 4])
def test_tail_power_formula_against_quadrature(d):
    # finite segment [100, 1e6] via the log substitution t = e^u, checked
    # against the antiderivative difference
    nodes, weights = leggauss(400)
    a, b = math.log(100.0), math.log(1e6)
    u = 0.5 * (b - a) * nodes + 0.5 * (a + b)
    numeric = 0.5 * (b - a) * float(np.dot(weights, np.exp(u * (1.0 - 0.5 * d))))
    analytic = tail_power_integral(100.0, d) - tail_power_integral(1e6, d)
    assert abs(numeric - analytic) / analytic < 1e-6


def test_q_integral_at_zero():
    result = q_integral(0.0, 3)
    assert result.value == pytest.approx(1.0, abs=1e-9)
    assert result.error_estimate < 1e-5


def test_q_integral_closed_form_1d():
    # Q(z) = 1/sqrt(1 - z^2) in one dimension
    for z in (0.25, 0.5, 0.75):
        result = q_integral(z, 1)
        assert result.value == pytest.approx(1.0 / math.sqrt(1.0 - z * z), rel=1e-8)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_q_integral_consistent_with_series(d):
    # the series truncation error at z <= 0.5 is far below float resolution,
    # so the comparison tolerance is the quadrature's own error estimate
    q64 = q_sequence(d, 64)
    for z in (0.1, 0.3, 0.5):
        result = q_integral(z, d)
        truncation = z**65 / (1.0 - z)
        budget = result.error_estimate + truncation + 1e-9
        assert abs(result.value - ogf_eval(q64, z)) < budget


def test_q_integral_divergent_cases():
    with pytest.raises(DivergentIntegral):
        q_integral(1.0, 1)
    with pytest.raises(DivergentIntegral):
        q_integral(1.0, 2)


def test_q_integral_domain():
    with pytest.raises(DomainError):
        q_integral(-0.1, 3)
    with pytest.raises(DomainError):
        q_integral(1.5, 3)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_q_one_reference_values(d):
    result = q_integral(1.0, d)
    assert result.value == pytest.approx(Q_ONE[d], abs=1e-5)
    assert abs(result.value - Q_ONE[d]) < result.error_estimate


def test_q_integral_deterministic():
    a = q_integral(1.0, 3)
    b = q_integral(1.0, 3)
    assert a == b


def test_q_integral_tolerance_exhaustion():
    cfg = QuadratureConfig(abs_tol=1e-15, max_refinements=1)
    with pytest.raises(ToleranceNotMet):
        q_integral(0.9, 2, cfg)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_q_monotone_in_z(d):
    zs = [0.0, 0.2, 0.4, 0.6, 0.8, 0.9]
    values = [v for _, v in abel_scan(d, zs)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_abel_scan_divergence_evidence_2d():
    points = abel_scan(2, [0.9, 0.99, 0.999])
    values = [v for _, v in points]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] > 2.0


def test_abel_scan_bounded_3d():
    points = abel_scan(3, [0.9, 0.99, 0.999])
    values = [v for _, v in points]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] < Q_ONE[3]


def test_abel_scan_validation():
    with pytest.raises(DomainError):
        abel_scan(2, [0.5, 0.5])
    with pytest.raises(DomainError):
        abel_scan(2, [0.5, 1.0])


def test_classification_low_dimensions():
    for d in (1, 2):
        c = return_probability(d)
        assert c.kind == "recurrent"
        assert c.return_probability is None


def test_classification_high_dimensions():
    expected = {3: 0.340537329551, 4: 0.193201673225,
                5: 0.135178609821, 6: 0.104715495629}
    previous = 1.0
    for d in (3, 4, 5, 6):
        c = return_probability(d)
        assert c.kind == "transient"
        assert 0.0 < c.return_probability < 1.0
        assert c.return_probability == pytest.approx(expected[d], abs=1e-5)
        assert c.return_probability < previous
        previous = c.return_probability


@pytest.mark.parametrize("order", [16, 64])
@pytest.mark.parametrize("d", [3, 4, 5])
def test_bracketing_invariant(d, order):
    # partial sums lower-bound Q(1); the integrated head at the split plus
    # the 1%-inflated asymptotic tail upper-bounds the quadrature value
    result = q_integral(1.0, d)
    partial = float(sum(q_sequence(d, order).coeffs))
    upper = result.head_at_split + result.error_estimate + 1.01 * result.tail_at_split
    assert partial <= result.value <= upper


def test_bracketing_invariant_certified_margin_d6():
    # at d = 6 the true tail exceeds the leading asymptotic by just over 1%
    # at the default split, so only the module's 2% margin certifies it
    result = q_integral(1.0, 6)
    partial = float(sum(q_sequence(6, 32).coeffs))
    upper = result.head_at_split + result.error_estimate + 1.02 * result.tail_at_split
    assert partial <= result.value <= upper


def test_polya_bracket_contains_quadrature_value():
    lower, upper = polya_bracket(3)
    result = q_integral(1.0, 3)
    p = 1.0 - 1.0 / result.value
    assert lower <= p <= upper
    assert lower == pytest.approx(float(partial_return_probability(3, 64)), rel=1e-15)


def test_polya_bracket_rejects_recurrent():
    with pytest.raises(DivergentIntegral):
        polya_bracket(2)


def test_split_point_stability():
    base = q_integral(1.0, 3, QuadratureConfig(split_point=200.0))
    doubled = q_integral(1.0, 3, QuadratureConfig(split_point=400.0))
    assert abs((1.0 - 1.0 / base.value) - (1.0 - 1.0 / doubled.value)) < 1e-4


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(split_point=-5.0)
    with pytest.raises(DomainError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureConfig(max_refinements=0)
