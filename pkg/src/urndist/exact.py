"""Exact rational arithmetic for the first-success-without-replacement law.

An urn holds ``total`` objects of which ``good`` are the ones we want.
Objects are drawn uniformly at random without replacement and X is the
index of the first draw that yields a good object.  X is supported on
1..total-good+1 and its mass function is

    P(n) = C(total-n, good-1) / C(total, good)
         = Fail(n-1) * good / (total-n+1),

where Fail(n) = C(total-n, good) / C(total, good) is the probability that
the first n draws all miss.  Everything in this module is computed with
arbitrary-precision rationals (``fractions.Fraction``), so equality means
mathematical equality: there are no tolerances anywhere in this layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError

__all__ = [
    "UrnParams",
    "PmfTable",
    "binomial",
    "fail_probability",
    "pmf",
    "cdf",
    "mean",
    "variance",
    "median",
    "mode",
    "support",
    "pmf_table",
    "sum_binom_closed",
    "sum_binom_from_closed",
    "sum_j_binom_closed",
]


def _require_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class UrnParams:
    """Validated urn description: ``total`` objects, ``good`` of them good.

    Instances are immutable and safe to share between threads or processes.
    Construction rejects ``good == 0``: with no good object the first
    success never happens and no distribution exists.
    """

    total: int
    good: int

    def __post_init__(self) -> None:
        _require_int("total", self.total)
        _require_int("good", self.good)
        if self.good < 1:
            raise ParameterError(f"good must be >= 1, got {self.good}")
        if self.total < self.good:
            raise ParameterError(
                f"total must be >= good, got total={self.total} good={self.good}"
            )

    @property
    def support_size(self) -> int:
        """Number of attainable outcomes, total - good + 1."""
        return self.total - self.good + 1


def support(params: UrnParams) -> range:
    """The set of attainable outcomes, as the integer interval 1..total-good+1."""
    return range(1, params.support_size + 1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), exactly.

    Follows the usual combinatorial convention: 0 for k < 0 or k > n.
    Negative n is an error rather than the generalized binomial.
    """
    _require_int("n", n)
    _require_int("k", k)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def fail_probability(params: UrnParams, n: int) -> Fraction:
    """Probability that the first ``n`` draws are all bad.

    Equals C(total-n, good) / C(total, good); by convention 1 at n = 0 and
    0 once n exceeds the number of bad objects.
    """
    _require_int("n", n)
    if n < 0:
        raise ParameterError(f"draw count must be >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    if n > params.total - params.good:
        return Fraction(0)
    return Fraction(
        binomial(params.total - n, params.good),
        binomial(params.total, params.good),
    )


def pmf(params: UrnParams, n: int) -> Fraction:
    """P(X = n): probability the first good object appears on draw ``n``.

    Exactly 0 outside the support; n < 1 is a domain error.
    """
    _require_int("n", n)
    if n < 1:
        raise ParameterError(f"draw index must be >= 1, got {n}")
    if n > params.support_size:
        return Fraction(0)
    return fail_probability(params, n - 1) * Fraction(
        params.good, params.total - n + 1
    )


def cdf(params: UrnParams, n: int) -> Fraction:
    """P(X <= n).  Accepts n = 0 (gives 0) and n past the support (gives 1)."""
    return 1 - fail_probability(params, n)


def mean(params: UrnParams) -> Fraction:
    """E[X] = (total + 1) / (good + 1)."""
    return Fraction(params.total + 1, params.good + 1)


def variance(params: UrnParams) -> Fraction:
    """Var[X] = good (total - good) (total + 1) / ((good + 2)(good + 1)^2).

    For good = 1 this reduces to the uniform-distribution variance
    (total^2 - 1) / 12.
    """
    n, k = params.total, params.good
    return Fraction(k * (n - k) * (n + 1), (k + 2) * (k + 1) ** 2)


def median(params: UrnParams) -> int:
    """Smallest m with P(X <= m) >= 1/2.

    Found by scanning m = 1, 2, ... and testing the equivalent integer
    inequality 2 C(total-m, good) <= C(total, good); the running binomial
    is updated multiplicatively so the scan is cheap.
    """
    n, k = params.total, params.good
    full = binomial(n, k)
    remaining = binomial(n - 1, k)  # C(total - m, good) at m = 1
    m = 1
    while 2 * remaining > full:
        # C(n-m-1, k) = C(n-m, k) * (n-m-k) / (n-m); the division is exact.
        remaining = remaining * (n - m - k) // (n - m)
        m += 1
    return m


def mode(params: UrnParams) -> frozenset[int]:
    """Most probable outcome(s).

    {1} whenever good > 1 (the mass function strictly decreases); for
    good = 1 the distribution is uniform with mass 1/total everywhere, so
    every outcome ties and the whole support is returned.
    """
    if params.good > 1:
        return frozenset({1})
    return frozenset(support(params))


@dataclass(frozen=True)
class PmfTable:
    """The full exact mass function over the support.

    ``probabilities[i]`` is P(X = i+1).  Entries sum to exactly 1, are all
    positive, and strictly decrease when good > 1 (they are constant at
    1/total when good = 1).
    """

    params: UrnParams
    probabilities: tuple[Fraction, ...]

    def probability(self, n: int) -> Fraction:
        """P(X = n) looked up from the table; 0 outside the support."""
        if 1 <= n <= len(self.probabilities):
            return self.probabilities[n - 1]
        return Fraction(0)

    def total_mass(self) -> Fraction:
        return sum(self.probabilities, Fraction(0))

    def mean(self) -> Fraction:
        """First moment computed directly from the table entries."""
        return sum(
            (n * p for n, p in enumerate(self.probabilities, start=1)),
            Fraction(0),
        )

    def variance(self) -> Fraction:
        """Second central moment computed directly from the table entries."""
        m = self.mean()
        second = sum(
            (n * n * p for n, p in enumerate(self.probabilities, start=1)),
            Fraction(0),
        )
        return second - m * m


def pmf_table(params: UrnParams) -> PmfTable:
    """Tabulate the exact mass function over the whole support.

    Uses the ratio recurrence P(n+1) = P(n) (total-n+1-good) / (total-n),
    one small rational multiplication per support point.
    """
    n_total, k = params.total, params.good
    probs = [Fraction(k, n_total)]
    for n in range(1, params.support_size):
        probs.append(probs[-1] * Fraction(n_total - n + 1 - k, n_total - n))
    return PmfTable(params=params, probabilities=tuple(probs))


def sum_binom_closed(k: int, n: int) -> int:
    """Closed form of sum_{j=k}^{n} C(j, k): the hockey-stick value C(n+1, k+1)."""
    _require_int("k", k)
    _require_int("n", n)
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if n < k:
        raise ParameterError(f"n must be >= k, got n={n} k={k}")
    return binomial(n + 1, k + 1)


def sum_binom_from_closed(x: int, k: int, n: int) -> int:
    """Closed form of sum_{j=x}^{n} C(j, k) for k <= x <= n."""
    _require_int("x", x)
    _require_int("k", k)
    _require_int("n", n)
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if not k <= x <= n:
        raise ParameterError(f"need k <= x <= n, got x={x} k={k} n={n}")
    return binomial(n + 1, k + 1) - binomial(x, k + 1)


def sum_j_binom_closed(k: int, n: int) -> int:
    """Closed form of sum_{j=k}^{n} j C(j, k): n C(n+1, k+1) - C(n+1, k+2)."""
    _require_int("k", k)
    _require_int("n", n)
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if n < k:
        raise ParameterError(f"n must be >= k, got n={n} k={k}")
    return n * binomial(n + 1, k + 1) - binomial(n + 1, k + 2)
