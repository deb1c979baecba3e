"""Multiple testing: step-up false-discovery-rate procedures over vectors of
evidence values, decision-table bookkeeping, and the FDR power simulation
for both evidence measures.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .equivalence import EquivalenceMargin
from .normal import NormalPrior, NormalSampling, posterior_coefficient
from .rng import spawn_rng
from .special import normal_cdf

EVIDENCE_KINDS = ("frequentist", "bayesian")
SAMPLING_MODES = ("per_tail", "per_tail_literal", "shared")
COMBINATIONS = ("max", "difference")


@dataclass(frozen=True)
class DecisionTable:
    """Outcome counts for k hypotheses: U/V (true nulls kept/rejected),
    T/S (false nulls kept/rejected), with R = V+S rejections and W = k-R."""

    k: int
    k0: int
    V: int
    S: int

    def __post_init__(self):
        if not (0 <= self.k0 <= self.k and 0 <= self.V <= self.k0
                and 0 <= self.S <= self.k - self.k0):
            raise ValueError("inconsistent decision counts")

    @property
    def k1(self) -> int:
        return self.k - self.k0

    @property
    def R(self) -> int:
        return self.V + self.S

    @property
    def U(self) -> int:
        return self.k0 - self.V

    @property
    def T(self) -> int:
        return self.k1 - self.S

    @property
    def W(self) -> int:
        return self.k - self.R

    def fdp(self) -> float:
        """False discovery proportion V / max(R, 1); 0 with no rejections."""
        return self.V / max(self.R, 1)

    def power(self) -> float:
        """Proportion of false nulls rejected: (R - V) / max(k1, 1)."""
        return self.S / max(self.k1, 1)


def bh_procedure(pvals: Sequence[float], alpha: float):
    """Step-up procedure: reject the D smallest values where
    D = max{j : p_(j) <= j alpha / k} (0 if no j qualifies).

    Ties keep their original order (stable sort).  Returns (D, rejected)
    with ``rejected`` the sorted array of rejected indices; indices ranked
    below a qualifying j are rejected even if their own inequality fails.
    """
    p = np.asarray(pvals, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("need a non-empty 1-d vector of evidence values")
    if np.any((p < 0) | (p > 1)):
        raise ValueError("evidence values must lie in [0, 1]")
    k = p.size
    order = np.argsort(p, kind="stable")
    qualifying = np.nonzero(p[order] <= alpha * np.arange(1, k + 1) / k)[0]
    d = 0 if qualifying.size == 0 else int(qualifying[-1]) + 1
    return d, np.sort(order[:d])


def adaptive_bh(pvals: Sequence[float], alpha: float, lam: float = 0.5):
    """Step-up procedure with a plug-in estimate of the number of true nulls.

    k0_hat = (1 + #{p_i > lam}) / (1 - lam), capped at k, replaces k in the
    thresholds; since k0_hat <= k the rejection set always contains the
    plain step-up one.  Returns (D, rejected, k0_hat).
    """
    if not 0.0 < lam < 1.0:
        raise ValueError(f"lambda must lie in (0, 1), got {lam}")
    p = np.asarray(pvals, dtype=float)
    k = p.size
    k0_hat = min(float(k), (1.0 + float(np.sum(p > lam))) / (1.0 - lam))
    order = np.argsort(p, kind="stable")
    qualifying = np.nonzero(p[order] <= alpha * np.arange(1, k + 1) / k0_hat)[0]
    d = 0 if qualifying.size == 0 else int(qualifying[-1]) + 1
    return d, np.sort(order[:d]), k0_hat


def score_decisions(rejected: Sequence[int], truth: Sequence[bool]) -> DecisionTable:
    """Tabulate rejections against ground truth (True = null is false)."""
    truth = np.asarray(truth, dtype=bool)
    rej = np.asarray(rejected, dtype=int)
    if rej.size and (rej.min() < 0 or rej.max() >= truth.size):
        raise ValueError("rejected indices out of range")
    k = int(truth.size)
    k0 = int(np.sum(~truth))
    v = int(np.sum(~truth[rej])) if rej.size else 0
    s = int(rej.size) - v
    return DecisionTable(k=k, k0=k0, V=v, S=s)


@dataclass(frozen=True)
class FdrExperiment:
    """One simulation sweep of the step-up procedure over a grid of k1.

    Each hypothesis carries one truth label; the two tails draw
    independent sample means centered at boundary +/- epsilon_star
    (alternatives) or at the boundary itself (nulls).  ``per_tail`` scales
    the noise as sigma/sqrt(n); ``per_tail_literal`` draws with sd sigma
    and skips the sqrt(n) standardization; ``shared`` drives both tails
    from a single mean drawn near one boundary, so the opposite tail feels
    the full margin width.
    """

    k: int
    k1_grid: Sequence[int]
    n: int
    margin: EquivalenceMargin
    sigma: float
    tau: float
    epsilon_star: float
    alpha: float
    reps: int
    seed: int
    evidence: str = "frequentist"
    sampling: str = "per_tail"
    combination: str = "max"
    adaptive: bool = False
    storey_lambda: float = 0.5

    def __post_init__(self):
        if self.k < 1 or self.n < 1 or self.reps < 1:
            raise ValueError("k, n and reps must be positive")
        if any(not 0 <= k1 <= self.k for k1 in self.k1_grid):
            raise ValueError("every k1 must lie in [0, k]")
        if self.sigma <= 0 or self.tau <= 0:
            raise ValueError("sigma and tau must be positive")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must lie in (0, 1)")
        if self.epsilon_star <= 0:
            raise ValueError("epsilon_star must be positive")
        if self.margin.theta1 + self.epsilon_star >= self.margin.theta2 - self.epsilon_star:
            raise ValueError("epsilon_star too large for the margin")
        if self.evidence not in EVIDENCE_KINDS:
            raise ValueError(f"evidence must be one of {EVIDENCE_KINDS}")
        if self.sampling not in SAMPLING_MODES:
            raise ValueError(f"sampling must be one of {SAMPLING_MODES}")
        if self.combination not in COMBINATIONS:
            raise ValueError(f"combination must be one of {COMBINATIONS}")


@dataclass(frozen=True)
class FdrPoint:
    """Averages over replications at one k1 grid point."""

    k1: int
    mean_power: float
    mean_fdr: float
    se_power: float
    se_fdr: float


def _tail_z_stats(exp: FdrExperiment, truth: np.ndarray, rng) -> tuple:
    """Standardized per-tail statistics for one replication."""
    t1, t2 = exp.margin.theta1, exp.margin.theta2
    if exp.sampling == "shared":
        # one latent mean per hypothesis; nulls sit on a randomly chosen boundary
        boundary = np.where(rng.random(exp.k) < 0.5, t1, t2)
        theta = np.where(truth, t1 + exp.epsilon_star, boundary)
        xbar = theta + exp.sigma / math.sqrt(exp.n) * rng.standard_normal(exp.k)
        z_r = math.sqrt(exp.n) * (xbar - t1) / exp.sigma
        z_l = math.sqrt(exp.n) * (xbar - t2) / exp.sigma
        return z_r, z_l
    mu_r = np.where(truth, t1 + exp.epsilon_star, t1)
    mu_l = np.where(truth, t2 - exp.epsilon_star, t2)
    if exp.sampling == "per_tail":
        sd = exp.sigma / math.sqrt(exp.n)
        scale = math.sqrt(exp.n) / exp.sigma
    else:  # per_tail_literal
        sd = exp.sigma
        scale = 1.0 / exp.sigma
    x_r = mu_r + sd * rng.standard_normal(exp.k)
    x_l = mu_l + sd * rng.standard_normal(exp.k)
    return scale * (x_r - t1), scale * (x_l - t2)


def _combine_evidence(exp: FdrExperiment, z_r: np.ndarray, z_l: np.ndarray) -> np.ndarray:
    if exp.evidence == "bayesian":
        samp = NormalSampling(sigma=exp.sigma, n=exp.n)
        shrink = posterior_coefficient(samp, NormalPrior(exp.tau)) \
            * exp.sigma / math.sqrt(exp.n)
        p_r = 1.0 - normal_cdf(shrink * z_r)
        p_l = normal_cdf(shrink * z_l)
        return np.clip(p_r + p_l, 0.0, 1.0)
    p_r = 1.0 - normal_cdf(z_r)
    p_l = normal_cdf(z_l)
    if exp.combination == "max":
        return np.maximum(p_r, p_l)
    return np.abs(p_l - p_r)


def fdr_power_simulation(exp: FdrExperiment):
    """Average step-up power and FDR across the k1 grid.

    Streams derive from (seed, k1-index, replication-index), so results are
    reproducible and identical under any work scheduling; running the same
    seed with the other evidence kind reuses the very same draws, giving
    paired comparisons.
    """
    results = []
    for k1_idx, k1 in enumerate(exp.k1_grid):
        truth = np.zeros(exp.k, dtype=bool)
        truth[:k1] = True
        powers = np.empty(exp.reps)
        fdps = np.empty(exp.reps)
        for rep in range(exp.reps):
            rng = spawn_rng(exp.seed, k1_idx, rep)
            z_r, z_l = _tail_z_stats(exp, truth, rng)
            evidence = _combine_evidence(exp, z_r, z_l)
            if exp.adaptive:
                _, rejected, _ = adaptive_bh(evidence, exp.alpha, exp.storey_lambda)
            else:
                _, rejected = bh_procedure(evidence, exp.alpha)
            table = score_decisions(rejected, truth)
            powers[rep] = table.power()
            fdps[rep] = table.fdp()
        results.append(FdrPoint(
            k1=int(k1),
            mean_power=float(powers.mean()),
            mean_fdr=float(fdps.mean()),
            se_power=float(powers.std() / math.sqrt(exp.reps)),
            se_fdr=float(fdps.std() / math.sqrt(exp.reps)),
        ))
    return results
