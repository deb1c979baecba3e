"""Numeric kernel: log-gamma, regularized incomplete beta, normal CDF and
quantile, binomial PMF/CDF/quantile.

Everything here is self-contained (stdlib ``math`` plus numpy for array
convenience).  Mass functions are evaluated in log space so that sample
sizes up to ~1e4 neither overflow nor lose the tails; the incomplete beta
uses the modified Lentz continued fraction with the usual symmetry switch.
All functions are pure and safe to call from concurrent workers.
"""

import math

import numpy as np

_SQRT2 = math.sqrt(2.0)
_ERFC = np.vectorize(math.erfc, otypes=[float])


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0.

    Raises
    ------
    ValueError
        If ``x <= 0`` (poles and the reflection branch are out of scope).
    """
    if x <= 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _beta_cont_frac(a: float, b: float, x: float, max_iter: int = 1000,
                    eps: float = 1e-16) -> float:
    """Continued fraction for the incomplete beta (modified Lentz method).

    Converges quickly only for x < (a+1)/(a+b+2); callers must apply the
    symmetry switch first.
    """
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        # even step
        num = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + num * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + num / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        # odd step
        num = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + num * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + num / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < eps:
            return h
    raise RuntimeError(
        f"incomplete beta continued fraction did not converge for "
        f"a={a}, b={b}, x={x}"
    )


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b).

    This is the CDF of a Beta(a, b) random variable at x.  Relative
    accuracy is ~1e-13 over the ranges exercised here (a, b up to ~1e4).

    Parameters
    ----------
    a, b : float
        Positive shape parameters.
    x : float
        Evaluation point in [0, 1].
    """
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"reg_inc_beta requires a, b > 0, got a={a}, b={b}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"reg_inc_beta requires 0 <= x <= 1, got x={x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = (log_gamma(a + b) - log_gamma(a) - log_gamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _beta_cont_frac(a, b, x) / a
    return 1.0 - math.exp(log_front) * _beta_cont_frac(b, a, 1.0 - x) / b


def normal_cdf(z):
    """Standard normal CDF, elementwise on arrays, via erfc.

    Absolute error is at the level of the C library ``erfc`` (a few ulp),
    comfortably below 1e-15.
    """
    if np.ndim(z) == 0:
        return 0.5 * math.erfc(-float(z) / _SQRT2)
    return 0.5 * _ERFC(-np.asarray(z, dtype=float) / _SQRT2)


# Acklam's rational approximation for the initial quantile guess.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)


def normal_quantile(u: float) -> float:
    """Standard normal quantile (inverse CDF) for u in (0, 1).

    Acklam's approximation refined by two Newton steps against
    :func:`normal_cdf`, giving |normal_cdf(q(u)) - u| well below 1e-12.
    """
    u = float(u)
    if not 0.0 < u < 1.0:
        raise ValueError(f"normal_quantile requires 0 < u < 1, got {u}")
    p_low = 0.02425
    if u < p_low:
        q = math.sqrt(-2.0 * math.log(u))
        z = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
             / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    elif u <= 1.0 - p_low:
        q = u - 0.5
        r = q * q
        z = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
             / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    else:
        q = math.sqrt(-2.0 * math.log1p(-u))
        z = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
              / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    for _ in range(2):
        pdf = math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)
        if pdf <= 0.0:
            break
        z -= (normal_cdf(z) - u) / pdf
    return z


def _check_binomial_args(n: int, theta: float) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")


def binomial_logpmf_vector(n: int, theta: float) -> np.ndarray:
    """Log PMF of Bin(n, theta) over the whole support s = 0..n."""
    _check_binomial_args(n, theta)
    s = np.arange(n + 1)
    log_choose = np.array([math.lgamma(n + 1) - math.lgamma(k + 1)
                           - math.lgamma(n - k + 1) for k in s])
    return log_choose + s * math.log(theta) + (n - s) * math.log1p(-theta)


def binomial_pmf_vector(n: int, theta: float) -> np.ndarray:
    """PMF of Bin(n, theta) over the whole support s = 0..n."""
    return np.exp(binomial_logpmf_vector(n, theta))


def binomial_pmf(n: int, theta: float, s: int) -> float:
    """P(T = s) for T ~ Bin(n, theta), computed in log space."""
    _check_binomial_args(n, theta)
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in [0, {n}], got {s}")
    log_p = (math.lgamma(n + 1) - math.lgamma(s + 1) - math.lgamma(n - s + 1)
             + s * math.log(theta) + (n - s) * math.log1p(-theta))
    return math.exp(log_p)


def binomial_cdf(n: int, theta: float, s: int) -> float:
    """P(T <= s) for T ~ Bin(n, theta), summed over the shorter tail.

    Terms are accumulated with ``math.fsum`` so the result is exact to a
    rounding of the true tail sum (relative error ~1e-15).
    """
    _check_binomial_args(n, theta)
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in [0, {n}], got {s}")
    if s == n:
        return 1.0
    if s + 1 <= n - s:
        return min(1.0, math.fsum(binomial_pmf(n, theta, j) for j in range(s + 1)))
    upper = math.fsum(binomial_pmf(n, theta, j) for j in range(s + 1, n + 1))
    return max(0.0, 1.0 - upper)


def binomial_sf(n: int, theta: float, s: int) -> float:
    """P(T >= s) for T ~ Bin(n, theta); the upper tail including s."""
    _check_binomial_args(n, theta)
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in [0, {n}], got {s}")
    if s == 0:
        return 1.0
    if n - s + 1 <= s:
        return min(1.0, math.fsum(binomial_pmf(n, theta, j) for j in range(s, n + 1)))
    return max(0.0, 1.0 - binomial_cdf(n, theta, s - 1))


def binomial_quantile(n: int, theta: float, u: float) -> int:
    """Generalized inverse CDF: min{s : P(T <= s) >= u} for T ~ Bin(n, theta).

    The left-continuous convention makes discrete critical constants well
    defined; ``u`` must lie strictly inside (0, 1).
    """
    _check_binomial_args(n, theta)
    if not 0.0 < u < 1.0:
        raise ValueError(f"u must lie in (0, 1), got {u}")
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi) // 2
        if binomial_cdf(n, theta, mid) >= u:
            hi = mid
        else:
            lo = mid + 1
    return lo
