"""Frequentist TOST core: margins, one-sided/combined p-values, critical
constants, decision rule.  Expected values come from exact enumeration."""

import math
from fractions import Fraction

import numpy as np
import pytest

from equilab import (EquivalenceMargin, SignificanceLevels, binomial_pmf_vector,
                     binom_critical_constants, binom_onesided_pvalues,
                     binom_tost_pvalue, decide)
from equilab.equivalence import EvidenceMeasure


def exact_upper_tail(n, theta, s):
    """P(T >= s) as an exact rational, via math.comb."""
    num = Fraction(theta).limit_denominator(10**6)
    acc = Fraction(0)
    for j in range(s, n + 1):
        acc += Fraction(math.comb(n, j)) * num ** j * (1 - num) ** (n - j)
    return acc


class TestTypes:
    def test_margin_validation(self):
        with pytest.raises(ValueError):
            EquivalenceMargin(0.5, 0.5)
        with pytest.raises(ValueError):
            EquivalenceMargin(0.8, 0.2)

    def test_margin_derived_fields(self):
        m = EquivalenceMargin(1.0, 4.0)
        assert m.center == 2.5
        assert m.half_width == 1.5

    def test_levels_validation(self):
        with pytest.raises(ValueError):
            SignificanceLevels(0.0, 0.05)
        assert SignificanceLevels.symmetric(0.1).alpha_lower == 0.1

    def test_evidence_validation(self):
        with pytest.raises(ValueError):
            EvidenceMeasure(1.2, "upper", "frequentist")
        with pytest.raises(ValueError):
            EvidenceMeasure(0.5, "sideways", "frequentist")
        with pytest.raises(ValueError):
            EvidenceMeasure(0.5, "upper", "exact")


class TestTostPvalue:
    def test_symmetric_midpoint_observation(self):
        margin = EquivalenceMargin(0.25, 0.75)
        upper, lower = binom_onesided_pvalues(50, 25, margin)
        ref = float(exact_upper_tail(50, 0.25, 25))
        assert upper.value == pytest.approx(ref, rel=1e-10)
        assert lower.value == pytest.approx(ref, rel=1e-10)  # mirror symmetry
        combined = binom_tost_pvalue(50, 25, margin)
        assert combined.value == pytest.approx(ref, rel=1e-10)
        assert combined.tail == "combined" and combined.method == "frequentist"

    def test_extreme_observations_give_one(self):
        margin = EquivalenceMargin(0.2, 0.8)
        assert binom_tost_pvalue(10, 0, margin).value == 1.0
        assert binom_tost_pvalue(10, 10, margin).value == 1.0

    def test_margin_outside_unit_interval_rejected(self):
        with pytest.raises(ValueError):
            binom_tost_pvalue(10, 5, EquivalenceMargin(-0.1, 0.5))
        with pytest.raises(ValueError):
            binom_tost_pvalue(10, 5, EquivalenceMargin(0.2, 1.0))

    def test_tail_monotonicity(self):
        margin = EquivalenceMargin(0.3, 0.7)
        uppers, lowers = zip(*[(u.value, l.value)
                               for u, l in (binom_onesided_pvalues(37, s, margin)
                                            for s in range(38))])
        assert all(b <= a + 1e-15 for a, b in zip(uppers, uppers[1:]))
        assert all(b >= a - 1e-15 for a, b in zip(lowers, lowers[1:]))

    def test_symmetric_margin_reflection_invariance(self):
        for n in range(1, 61):
            margin = EquivalenceMargin(0.25, 0.75)
            vals = [binom_tost_pvalue(n, s, margin).value for s in range(n + 1)]
            for s in range(n + 1):
                assert vals[s] == pytest.approx(vals[n - s], rel=1e-10)

    def test_intersection_union_consistency(self):
        # combined rejects iff both one-sided tests reject, all n <= 60
        for margin in (EquivalenceMargin(0.25, 0.75), EquivalenceMargin(0.2, 0.8)):
            for n in range(1, 61):
                for s in range(n + 1):
                    upper, lower = binom_onesided_pvalues(n, s, margin)
                    combined = binom_tost_pvalue(n, s, margin)
                    for alpha in (0.01, 0.05, 0.2):
                        assert decide(combined, alpha) == (
                            decide(upper, alpha) and decide(lower, alpha))

    def test_validity_at_lfc(self):
        # exact size of the level-alpha test never exceeds alpha at either
        # boundary parameter
        margin = EquivalenceMargin(0.25, 0.75)
        for n in (10, 35, 60):
            combined = np.array([binom_tost_pvalue(n, s, margin).value
                                 for s in range(n + 1)])
            for theta in (margin.theta1, margin.theta2):
                pmf = binomial_pmf_vector(n, theta)
                for alpha in np.arange(0.01, 0.201, 0.01):
                    assert float(pmf @ (combined <= alpha)) <= alpha + 1e-12


class TestCriticalConstants:
    def test_enumeration_oracle(self):
        n, margin = 50, EquivalenceMargin(0.25, 0.75)
        c, d = binom_critical_constants(n, margin, SignificanceLevels(0.05, 0.05))
        cdf = np.cumsum(binomial_pmf_vector(n, 0.25))
        assert c == int(np.argmax(cdf >= 0.95))
        cdf2 = np.cumsum(binomial_pmf_vector(n, 0.75))
        assert d == int(np.argmax(cdf2 >= 0.05))
        assert c <= d

    def test_narrow_margin_empty_region(self):
        c, d = binom_critical_constants(5, EquivalenceMargin(0.45, 0.55),
                                        SignificanceLevels(0.05, 0.05))
        assert c > d  # legal: the test never rejects

    def test_wide_levels_nonempty(self):
        c, d = binom_critical_constants(50, EquivalenceMargin(0.25, 0.75),
                                        SignificanceLevels(0.5, 0.5))
        assert c <= d


class TestDecide:
    @pytest.mark.parametrize("value,expected", [(0.049, True), (0.05, True),
                                                (0.051, False)])
    def test_boundary_inclusive(self, value, expected):
        ev = EvidenceMeasure(value, "combined", "frequentist")
        assert decide(ev, 0.05) is expected
