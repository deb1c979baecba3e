"""Correlation structure of the evidence measures: closed forms vs seeded
Monte Carlo, and properties of the correlation estimator itself."""

import math

import numpy as np
import pytest

from equilab import (EquivalenceMargin, NormalPrior, NormalSampling,
                     corr_equivalence_closed, corr_equivalence_mc,
                     corr_partial_pvalues, corr_two_sided, corr_two_sided_mc,
                     equivalence_covariance_terms, expected_phi_product,
                     sample_correlation, spawn_rng)
from equilab.special import normal_cdf


class TestExpectedPhiProduct:
    def test_zero_arguments(self):
        assert expected_phi_product(0.0, 0.0) == pytest.approx(0.25, abs=1e-15)

    def test_equal_arguments_formula(self):
        for a in (0.3, 1.7, 4.0):
            expected = 0.25 + math.asin(a * a / (1 + a * a)) / (2 * math.pi)
            assert expected_phi_product(a, a) == pytest.approx(expected, rel=1e-14)

    def test_unit_arguments_equal_one_third(self):
        value = expected_phi_product(1.0, 1.0)
        assert value == pytest.approx(1.0 / 3.0, rel=1e-14)
        rng = spawn_rng(314, 0)
        z = rng.standard_normal(10**7)
        phi2 = normal_cdf(z) ** 2
        se = float(phi2.std() / math.sqrt(z.size))
        assert abs(float(phi2.mean()) - value) <= 3 * se

    def test_phi_variance_matches_arcsin_half(self):
        # Var(Phi(Z)) = arcsin(1/2) / (2 pi) = 1/12
        rng = spawn_rng(9, 0)
        z = rng.standard_normal(10**6)
        v = float(normal_cdf(z).var())
        assert math.asin(0.5) / (2 * math.pi) == pytest.approx(1.0 / 12.0, rel=1e-14)
        assert abs(v - 1.0 / 12.0) <= 3 * 0.001  # loose moment SE


class TestSampleCorrelation:
    def test_scale_invariance(self):
        rng = spawn_rng(21, 0)
        x = rng.standard_normal(5000)
        y = 0.3 * x + rng.standard_normal(5000)
        base = sample_correlation(x, y)
        for a, b in ((2.0, 5.0), (0.01, 300.0)):
            scaled = sample_correlation(a * x, b * y)
            assert scaled.rho == pytest.approx(base.rho, abs=1e-12)
            assert scaled.std_error == pytest.approx(base.std_error, rel=1e-9)

    def test_se_present_only_for_mc(self):
        res = sample_correlation(np.arange(10.0), np.arange(10.0) ** 2)
        assert res.method == "monte_carlo" and res.std_error is not None
        closed = corr_two_sided(0.5)
        assert closed.method == "closed_form" and closed.std_error is None

    def test_rejects_degenerate_input(self):
        with pytest.raises(ValueError):
            sample_correlation(np.ones(10), np.arange(10.0))


class TestEquivalenceCorrelation:
    def test_four_terms_cancel_exactly(self):
        samp = NormalSampling(sigma=1.0, n=20)
        prior = NormalPrior(0.5)
        t1, t2, t3, t4 = equivalence_covariance_terms(samp, prior)
        assert t1 > 0
        assert t1 == t2 == t3 == t4
        result = corr_equivalence_closed(samp, prior, EquivalenceMargin(0.0, 2.0))
        assert result.rho == 0.0
        assert result.method == "closed_form"

    def test_term_value_formula(self):
        samp = NormalSampling(sigma=2.0, n=30)
        prior = NormalPrior(1.0)
        t1, *_ = equivalence_covariance_terms(samp, prior)
        arg = math.sqrt(30) * 1.0 / math.sqrt(30 * 1.0 + 2 * 4.0)
        assert t1 == pytest.approx(math.asin(arg) / (2 * math.pi), rel=1e-12)

    def test_mc_estimate_consistent_with_zero(self):
        samp = NormalSampling(sigma=1.0, n=20)
        res = corr_equivalence_mc(samp, NormalPrior(0.5),
                                  EquivalenceMargin(0.0, 2.0),
                                  draws=200_000, seed=3)
        assert abs(res.rho) <= 3 * res.std_error

    def test_scale_change_keeps_zero(self):
        for sigma in (1.0, 2.0):
            res = corr_equivalence_closed(NormalSampling(sigma, 20),
                                          NormalPrior(0.5),
                                          EquivalenceMargin(0.0, 2.0))
            assert res.rho == 0.0


class TestPartialPvalueCorrelation:
    def test_degenerate_margin_is_minus_one(self):
        res = corr_partial_pvalues(NormalSampling(1.0, 10), half_width=0.0)
        assert res.rho == -1.0 and res.method == "closed_form"

    def test_wide_margin_near_zero(self):
        # half_width * sqrt(n) / sigma = 5
        samp = NormalSampling(sigma=1.0, n=25)
        res = corr_partial_pvalues(samp, EquivalenceMargin(-1.0, 1.0),
                                   draws=10**6, seed=0)
        assert -0.1 < res.rho < 0.0

    def test_tiny_margin_continuity(self):
        # the two tails are numerically a linear reflection at this width,
        # so the sample correlation is -1 up to float rounding
        samp = NormalSampling(sigma=1.0, n=25)
        res = corr_partial_pvalues(samp, half_width=1e-8 / 5.0, draws=10**5, seed=1)
        assert res.rho <= -1.0 + 1e-9

    def test_requires_exactly_one_margin_spec(self):
        samp = NormalSampling(1.0, 4)
        with pytest.raises(ValueError):
            corr_partial_pvalues(samp)
        with pytest.raises(ValueError):
            corr_partial_pvalues(samp, EquivalenceMargin(0, 1), half_width=0.5)


class TestTwoSidedCorrelation:
    def test_flat_prior_limit_is_one(self):
        assert corr_two_sided(1.0).rho == 1.0

    def test_half_weight_value(self):
        w = 0.5
        expected = (math.asin(math.sqrt(w / (2 - w)))
                    / math.sqrt(math.asin(w) * math.asin(1 / (2 - w))))
        res = corr_two_sided(w)
        assert res.rho == pytest.approx(expected, rel=1e-14)
        assert res.rho == pytest.approx(0.9957126516461483, rel=1e-10)

    def test_mc_cross_check(self):
        closed = corr_two_sided(0.5).rho
        mc = corr_two_sided_mc(0.5, draws=10**6, seed=8)
        assert abs(mc.rho - closed) <= 3 * mc.std_error

    def test_mc_degenerate_limit(self):
        mc = corr_two_sided_mc(1.0, draws=10**4, seed=8)
        assert mc.rho == pytest.approx(1.0, abs=1e-12)

    def test_monotone_in_weight(self):
        values = [corr_two_sided(w).rho for w in np.arange(0.1, 1.01, 0.1)]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(-1.0 <= v <= 1.0 for v in values)

    def test_domain(self):
        for w in (0.0, -0.5, 1.5):
            with pytest.raises(ValueError):
                corr_two_sided(w)
