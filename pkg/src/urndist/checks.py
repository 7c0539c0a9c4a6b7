"""Self-verification sweeps behind ``urn check``.

Each family re-derives a property of the distribution by an independent
route (brute-force enumeration, direct summation, cdf scans) and compares
it against the closed forms, exactly.  A family stops at its first
counterexample; the CLI turns any failure into a nonzero exit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterError
from .exact import (
    UrnParams,
    binomial,
    cdf,
    mean,
    median,
    mode,
    pmf_table,
    sum_binom_closed,
    sum_binom_from_closed,
    sum_j_binom_closed,
    variance,
)
from .oracle import ENUMERATION_LIMIT, enumerate_pmf

__all__ = ["FamilyResult", "run_all"]


@dataclass
class FamilyResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _all_params(max_total: int):
    for total in range(1, max_total + 1):
        for good in range(1, total + 1):
            yield UrnParams(total=total, good=good)


def _check_pmf_oracle(max_total: int, force: bool) -> FamilyResult:
    result = FamilyResult("pmf-oracle")
    bound = max_total if force else min(max_total, ENUMERATION_LIMIT)
    for params in _all_params(bound):
        result.cases += 1
        enumerated = enumerate_pmf(params, force=force)
        closed = pmf_table(params)
        if enumerated.probabilities != closed.probabilities:
            mismatch = next(
                n
                for n, (a, b) in enumerate(
                    zip(enumerated.probabilities, closed.probabilities), start=1
                )
                if a != b
            )
            result.failures.append(
                f"pmf mismatch at total={params.total} good={params.good} "
                f"n={mismatch}: enumeration {enumerated.probabilities[mismatch - 1]} "
                f"vs closed form {closed.probabilities[mismatch - 1]}"
            )
            return result
    return result


def _check_moments(max_total: int) -> FamilyResult:
    result = FamilyResult("moments")
    for params in _all_params(max_total):
        result.cases += 1
        table = pmf_table(params)
        if table.mean() != mean(params):
            result.failures.append(
                f"mean mismatch at total={params.total} good={params.good}: "
                f"sum n*P(n) = {table.mean()} vs closed form {mean(params)}"
            )
            return result
        if table.variance() != variance(params):
            result.failures.append(
                f"variance mismatch at total={params.total} good={params.good}: "
                f"table gives {table.variance()} vs closed form {variance(params)}"
            )
            return result
    return result


def _check_normalization_cdf(max_total: int) -> FamilyResult:
    result = FamilyResult("normalization-cdf")
    for params in _all_params(max_total):
        result.cases += 1
        table = pmf_table(params)
        if table.total_mass() != 1:
            result.failures.append(
                f"pmf does not sum to 1 at total={params.total} "
                f"good={params.good}: {table.total_mass()}"
            )
            return result
        prefix = Fraction(0)
        for n, p in enumerate(table.probabilities, start=1):
            prefix += p
            if cdf(params, n) != prefix:
                result.failures.append(
                    f"cdf mismatch at total={params.total} good={params.good} "
                    f"n={n}: cdf {cdf(params, n)} vs prefix sum {prefix}"
                )
                return result
        if cdf(params, params.support_size) != 1:
            result.failures.append(
                f"cdf does not reach 1 at total={params.total} good={params.good}"
            )
            return result
    return result


def _check_pmf_shape(max_total: int) -> FamilyResult:
    result = FamilyResult("pmf-shape")
    for params in _all_params(max_total):
        result.cases += 1
        table = pmf_table(params)
        probs = table.probabilities
        total, good = params.total, params.good
        if good == 1:
            flat = Fraction(1, total)
            if any(p != flat for p in probs):
                result.failures.append(
                    f"good=1 pmf not constant 1/{total} at total={total}"
                )
                return result
        else:
            for n in range(1, len(probs)):
                # strictly decreasing, with the stated ratio P(n)/P(n+1)
                if not (
                    probs[n - 1] > probs[n]
                    and probs[n - 1] * (total - n + 1 - good)
                    == probs[n] * (total - n)
                ):
                    result.failures.append(
                        f"pmf shape violated at total={total} good={good} n={n}"
                    )
                    return result
        top = max(probs)
        argmax = frozenset(n for n, p in enumerate(probs, start=1) if p == top)
        if argmax != mode(params):
            # CSV output forbids commas; render the sets space-separated
            shown = " ".join(map(str, sorted(argmax)))
            expected = " ".join(map(str, sorted(mode(params))))
            result.failures.append(
                f"mode mismatch at total={total} good={good}: "
                f"argmax {{{shown}}} vs mode() {{{expected}}}"
            )
            return result
    return result


def _check_median(max_total: int) -> FamilyResult:
    result = FamilyResult("median")
    for params in _all_params(max_total):
        result.cases += 1
        total, good = params.total, params.good
        m = median(params)
        full = binomial(total, good)
        ok_binom = 2 * binomial(total - m, good) <= full and (
            m == 1 or 2 * binomial(total - m + 1, good) > full
        )
        by_scan = next(
            n for n in range(1, params.support_size + 1)
            if cdf(params, n) >= Fraction(1, 2)
        )
        if not ok_binom or by_scan != m:
            result.failures.append(
                f"median mismatch at total={total} good={good}: median() = {m}; "
                f"cdf scan = {by_scan}; binomial test {'ok' if ok_binom else 'failed'}"
            )
            return result
    return result


def _check_sum_identities(max_total: int) -> FamilyResult:
    result = FamilyResult("lemma-sums")
    for k in range(0, max_total + 1):
        # prefix[j] = sum_{i=k}^{j} C(i,k), jprefix likewise with a factor i
        prefix = {k - 1: 0}
        jprefix = {k - 1: 0}
        for j in range(k, max_total + 1):
            term = binomial(j, k)
            prefix[j] = prefix[j - 1] + term
            jprefix[j] = jprefix[j - 1] + j * term
        for n in range(k, max_total + 1):
            result.cases += 1
            if sum_binom_closed(k, n) != prefix[n]:
                result.failures.append(
                    f"running-sum identity failed at k={k} n={n}: "
                    f"closed {sum_binom_closed(k, n)} vs direct {prefix[n]}"
                )
                return result
            if sum_j_binom_closed(k, n) != jprefix[n]:
                result.failures.append(
                    f"weighted-sum identity failed at k={k} n={n}: "
                    f"closed {sum_j_binom_closed(k, n)} vs direct {jprefix[n]}"
                )
                return result
            for x in range(k, n + 1):
                result.cases += 1
                direct = prefix[n] - prefix[x - 1]
                if sum_binom_from_closed(x, k, n) != direct:
                    result.failures.append(
                        f"partial-sum identity failed at k={k} x={x} n={n}: "
                        f"closed {sum_binom_from_closed(x, k, n)} vs direct {direct}"
                    )
                    return result
    return result


def run_all(max_total: int, *, force: bool = False) -> list[FamilyResult]:
    """Run every verification family up to ``max_total``; order is stable."""
    if (
        isinstance(max_total, bool)
        or not isinstance(max_total, int)
        or max_total < 1
    ):
        raise ParameterError(
            f"max total must be a positive integer, got {max_total!r}"
        )
    return [
        _check_pmf_oracle(max_total, force),
        _check_moments(max_total),
        _check_normalization_cdf(max_total),
        _check_pmf_shape(max_total),
        _check_median(max_total),
        _check_sum_identities(max_total),
    ]
