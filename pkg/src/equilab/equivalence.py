"""Equivalence hypotheses and frequentist TOST evidence for the binomial model.

The tested hypothesis is that a parameter lies outside a fixed interval
(theta1, theta2); equivalence is declared only when both one-sided tests
reject.  One-sided p-values are computed at the observed statistic under
the least favorable configuration (the margin boundary for each tail), and
the combined equivalence p-value is their maximum.
"""

from dataclasses import dataclass

from .special import binomial_cdf, binomial_quantile, binomial_sf

TAILS = ("upper", "lower", "combined")
METHODS = ("frequentist", "bayesian")


@dataclass(frozen=True)
class EquivalenceMargin:
    """The interval (theta1, theta2) forming the equivalence alternative."""

    theta1: float
    theta2: float

    def __post_init__(self):
        if not self.theta1 < self.theta2:
            raise ValueError(
                f"margin requires theta1 < theta2, got ({self.theta1}, {self.theta2})"
            )

    @property
    def center(self) -> float:
        """Midpoint of the margin."""
        return 0.5 * (self.theta1 + self.theta2)

    @property
    def half_width(self) -> float:
        """Half the margin width (the tolerance epsilon)."""
        return 0.5 * (self.theta2 - self.theta1)


@dataclass(frozen=True)
class SignificanceLevels:
    """Per-tail significance levels; equal by default, may differ."""

    alpha_upper: float = 0.05
    alpha_lower: float = 0.05

    def __post_init__(self):
        for name, a in (("alpha_upper", self.alpha_upper),
                        ("alpha_lower", self.alpha_lower)):
            if not 0.0 < a < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {a}")

    @classmethod
    def symmetric(cls, alpha: float) -> "SignificanceLevels":
        return cls(alpha, alpha)


@dataclass(frozen=True)
class EvidenceMeasure:
    """A p-value or posterior probability with its provenance."""

    value: float
    tail: str
    method: str

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"evidence value must lie in [0, 1], got {self.value}")
        if self.tail not in TAILS:
            raise ValueError(f"tail must be one of {TAILS}, got {self.tail!r}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")


def _check_binom_margin(margin: EquivalenceMargin) -> None:
    if not (0.0 < margin.theta1 and margin.theta2 < 1.0):
        raise ValueError(
            f"binomial margins must lie inside (0, 1), got "
            f"({margin.theta1}, {margin.theta2})"
        )


def binom_onesided_pvalues(n: int, s: int, margin: EquivalenceMargin):
    """One-sided LFC p-values for an observed success count.

    Returns
    -------
    (upper, lower) : tuple of EvidenceMeasure
        ``upper`` is P_{theta1}(T >= s), the p-value of the upper-tailed
        test of theta <= theta1; ``lower`` is P_{theta2}(T <= s) for the
        lower-tailed test of theta >= theta2.
    """
    _check_binom_margin(margin)
    p_r = binomial_sf(n, margin.theta1, s)
    p_l = binomial_cdf(n, margin.theta2, s)
    return (EvidenceMeasure(p_r, "upper", "frequentist"),
            EvidenceMeasure(p_l, "lower", "frequentist"))


def binom_tost_pvalue(n: int, s: int, margin: EquivalenceMargin) -> EvidenceMeasure:
    """Combined equivalence p-value: the maximum of the two one-sided p-values."""
    upper, lower = binom_onesided_pvalues(n, s, margin)
    return EvidenceMeasure(max(upper.value, lower.value), "combined", "frequentist")


def binom_critical_constants(n: int, margin: EquivalenceMargin,
                             levels: SignificanceLevels):
    """Critical constants (C, D) for the count-based rejection region.

    C is the (1 - alpha_upper) quantile of Bin(n, theta1) and D the
    alpha_lower quantile of Bin(n, theta2), both under the left-continuous
    generalized inverse.  The region {s : C <= s <= D} may be empty
    (C > D); that simply means the test never rejects at these levels.
    """
    _check_binom_margin(margin)
    c = binomial_quantile(n, margin.theta1, 1.0 - levels.alpha_upper)
    d = binomial_quantile(n, margin.theta2, levels.alpha_lower)
    return c, d


def decide(evidence: EvidenceMeasure, level: float) -> bool:
    """Declare equivalence (reject non-equivalence) iff value <= level."""
    return evidence.value <= level
