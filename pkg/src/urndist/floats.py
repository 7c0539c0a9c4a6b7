"""Floating-point evaluation layer for parameters beyond exact-arithmetic comfort.

Mirrors the closed forms of :mod:`urndist.exact` in IEEE doubles so that
tables, tail probabilities and convergence studies stay cheap for totals up
to around 10^9.  Log-probabilities are represented as plain floats (<= 0,
with -inf standing for probability zero); exp(-inf) == 0.0 makes the
out-of-support cases fall out naturally.

Accuracy notes
--------------
``log_fail`` is the backbone.  It switches between two evaluations:

* a direct sum of ``log1p`` terms over the shorter of the two telescoping
  product forms, used when ``min(n, good) <= _DIRECT_TERMS``.  This keeps
  the *relative* error of the log near 1e-15, which matters for the
  small-n/small-cdf regime where the lgamma route would lose 4-5 digits to
  cancellation (the cdf uses ``-expm1(log_fail)``, whose relative error is
  the absolute error of the log divided by the cdf itself).
* a four-term lgamma difference otherwise.  Its absolute error is a few
  ulps of lgamma(total+1), i.e. ~1e-11 for totals near 2000, which meets a
  1e-10 relative target for pmf and for cdf values that are not tiny; tiny
  cdf values can only occur with small n or small good, which the direct
  branch covers.

For totals around 1e9 combined with 32 < good < ~1e5, lgamma's absolute
error (~1e-5 in the log) can exceed the spacing between adjacent log-fail
values; monotonicity of ``cdf_float`` in n is then only guaranteed up to
that noise floor.  All supported workloads stay clear of that corner.
"""

from __future__ import annotations

import math

from .errors import ParameterError
from .exact import UrnParams

__all__ = [
    "log_fail",
    "pmf_float",
    "cdf_float",
    "mean_float",
    "variance_float",
]

NEG_INF = float("-inf")

# Largest telescoping-product length evaluated term by term; above this the
# lgamma route is both faster and accurate enough (see module docstring).
_DIRECT_TERMS = 32


def _log_fail_direct(total: int, good: int, n: int) -> float:
    # Shorter of the two equivalent product forms:
    #   prod_{j<n} (1 - good/(total-j))  ==  prod_{j<good} (1 - n/(total-j))
    if n <= good:
        return math.fsum(math.log1p(-good / (total - j)) for j in range(n))
    return math.fsum(math.log1p(-n / (total - j)) for j in range(good))


def _log_fail_lgamma(total: int, good: int, n: int) -> float:
    # log C(total-n, good) - log C(total, good) with the lgamma(good+1)
    # terms cancelled analytically: four calls instead of six.
    return (
        math.lgamma(total - n + 1)
        - math.lgamma(total - n - good + 1)
        - math.lgamma(total + 1)
        + math.lgamma(total - good + 1)
    )


def log_fail(params: UrnParams, n: int) -> float:
    """log of the probability that the first ``n`` draws are all bad.

    Exactly 0.0 at n = 0 and -inf once n exceeds the number of bad objects.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParameterError(f"draw count must be an integer, got {n!r}")
    if n < 0:
        raise ParameterError(f"draw count must be >= 0, got {n}")
    if n == 0:
        return 0.0
    total, good = params.total, params.good
    if n > total - good:
        return NEG_INF
    if min(n, good) <= _DIRECT_TERMS:
        return _log_fail_direct(total, good, n)
    return _log_fail_lgamma(total, good, n)


def pmf_float(params: UrnParams, n: int) -> float:
    """P(X = n) in doubles: exp(log_fail(n-1)) * good / (total - n + 1)."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParameterError(f"draw index must be an integer, got {n!r}")
    if n < 1:
        raise ParameterError(f"draw index must be >= 1, got {n}")
    if n > params.support_size:
        return 0.0
    return math.exp(log_fail(params, n - 1)) * (
        params.good / (params.total - n + 1)
    )


def cdf_float(params: UrnParams, n: int) -> float:
    """P(X <= n) in doubles, clamped to [0, 1].

    Computed as -expm1(log_fail(n)) rather than 1 - exp(...): when the fail
    probability is close to 1 the expm1 form keeps full relative accuracy
    in the small cdf value instead of cancelling it away.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParameterError(f"draw count must be an integer, got {n!r}")
    if n < 0:
        raise ParameterError(f"draw count must be >= 0, got {n}")
    if n == 0:
        return 0.0
    if n >= params.support_size:
        return 1.0
    value = -math.expm1(log_fail(params, n))
    return min(1.0, max(0.0, value))


def mean_float(params: UrnParams) -> float:
    """(total + 1) / (good + 1); exact integer division rounded once."""
    return (params.total + 1) / (params.good + 1)


def variance_float(params: UrnParams) -> float:
    """Closed-form variance; the integer ratio is rounded exactly once."""
    n, k = params.total, params.good
    return (k * (n - k) * (n + 1)) / ((k + 2) * (k + 1) ** 2)
