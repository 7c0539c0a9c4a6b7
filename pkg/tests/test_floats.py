"""Float-layer accuracy against the exact layer and high-precision references."""

import math
from fractions import Fraction

import mpmath
import pytest

from urndist import (
    ParameterError,
    UrnParams,
    cdf,
    cdf_float,
    log_fail,
    mean,
    mean_float,
    pmf,
    pmf_float,
    support,
    variance,
    variance_float,
)

BIG = UrnParams(total=10**9, good=10**6)


def rel_err(approx: float, exact: Fraction) -> float:
    if exact == 0:
        return abs(approx)
    return abs(approx - float(exact)) / abs(float(exact))


class TestLogFail:
    def test_example_value(self):
        got = log_fail(UrnParams(10, 3), 2)
        assert abs(got - math.log(7 / 15)) < 1e-12

    def test_beyond_bad_is_neg_inf(self):
        assert log_fail(UrnParams(10, 3), 9) == float("-inf")

    def test_zero_draws_huge_urn(self):
        assert log_fail(BIG, 0) == 0.0

    def test_negative_rejected(self):
        with pytest.raises(ParameterError):
            log_fail(UrnParams(10, 3), -1)

    def test_against_mpmath_small_n_huge_urn(self):
        # the small-cdf regime: log of a product of a handful of ratios
        mpmath.mp.dps = 60
        for n in (1, 2, 5, 17, 100, 1000):
            expected = mpmath.fsum(
                mpmath.log1p(mpmath.mpf(-(10**6)) / (10**9 - j)) for j in range(n)
            )
            got = log_fail(BIG, n)
            assert abs(got - float(expected)) <= 1e-13 * abs(float(expected))

    def test_against_exact_moderate(self):
        mpmath.mp.dps = 60
        for total in (57, 200, 999):
            for good in (1, 2, 31, 32, 33, 50, total):
                if good > total:
                    continue
                params = UrnParams(total, good)
                assert log_fail(params, 0) == 0.0
                for n in range(1, total - good + 1):
                    ratio = Fraction(
                        math.comb(total - n, good), math.comb(total, good)
                    )
                    want = float(
                        mpmath.log(mpmath.mpf(ratio.numerator))
                        - mpmath.log(mpmath.mpf(ratio.denominator))
                    )
                    assert log_fail(params, n) == pytest.approx(
                        want, rel=1e-11, abs=1e-13
                    )


class TestPmfFloat:
    def test_examples(self):
        assert rel_err(pmf_float(UrnParams(10, 3), 2), Fraction(7, 30)) < 1e-12
        assert abs(pmf_float(UrnParams(5, 1), 4) - 0.2) < 1e-12
        assert pmf_float(UrnParams(10, 3), 20) == 0.0

    def test_first_draw_is_exact_ratio(self):
        # pmf(1) = good/total with a single correctly rounded division
        assert pmf_float(UrnParams(10**5, 10**4), 1) == 10**4 / 10**5

    def test_below_one_rejected(self):
        with pytest.raises(ParameterError):
            pmf_float(UrnParams(10, 3), 0)

    def test_sums_to_one_large_supports(self):
        for total, good in ((10**5, 10), (10**5, 10**4), (12345, 17)):
            params = UrnParams(total, good)
            acc = math.fsum(pmf_float(params, n) for n in support(params))
            assert abs(acc - 1.0) < 1e-8


class TestCdfFloat:
    def test_examples(self):
        assert rel_err(cdf_float(UrnParams(10, 3), 2), Fraction(8, 15)) < 1e-12
        assert cdf_float(UrnParams(10, 3), 0) == 0.0
        assert cdf_float(UrnParams(10, 3), 8) == 1.0

    def test_negative_rejected(self):
        with pytest.raises(ParameterError):
            cdf_float(UrnParams(10, 3), -2)

    def test_small_cdf_keeps_relative_accuracy(self):
        # huge urn, tiny head probabilities: the expm1 formulation matters
        mpmath.mp.dps = 60
        for n in (1, 2, 10, 200):
            lf = mpmath.fsum(
                mpmath.log1p(mpmath.mpf(-(10**6)) / (10**9 - j)) for j in range(n)
            )
            want = float(-mpmath.expm1(lf))
            got = cdf_float(BIG, n)
            assert got == pytest.approx(want, rel=1e-12)

    def test_monotone_desk_scale(self):
        for total in (13, 64, 200, 1999):
            for good in (1, 2, 7, 33, total // 2, total):
                if good < 1 or good > total:
                    continue
                params = UrnParams(total, good)
                values = [cdf_float(params, n) for n in range(0, total - good + 2)]
                assert all(a <= b for a, b in zip(values, values[1:]))
                assert all(0.0 <= v <= 1.0 for v in values)

    def test_monotone_huge_urn_windows(self):
        for good in (1, 17, 32, 10**6):
            params = UrnParams(10**9, good)
            head = [cdf_float(params, n) for n in range(0, 3000)]
            assert all(a <= b for a, b in zip(head, head[1:]))


class TestMomentFloats:
    def test_mean_example(self):
        assert abs(mean_float(UrnParams(10, 3)) - 2.75) < 1e-15

    def test_variance_uniform(self):
        assert rel_err(variance_float(UrnParams(9, 1)), Fraction(20, 3)) < 1e-12

    def test_variance_degenerate(self):
        assert variance_float(UrnParams(6, 6)) == 0.0

    def test_huge_urn_values_finite(self):
        assert mean_float(BIG) == pytest.approx((10**9 + 1) / (10**6 + 1), rel=1e-15)
        assert math.isfinite(variance_float(BIG))


class TestAgreementSweep:
    """Small-scale mirror of the full float-accuracy acceptance criterion."""

    def test_pmf_cdf_mean_variance_against_exact(self):
        for total in range(1, 121):
            for good in range(1, total + 1):
                params = UrnParams(total, good)
                assert rel_err(mean_float(params), mean(params)) < 1e-10
                if variance(params) == 0:
                    assert variance_float(params) == 0.0
                else:
                    assert rel_err(variance_float(params), variance(params)) < 1e-10
                for n in support(params):
                    assert rel_err(pmf_float(params, n), pmf(params, n)) < 1e-10
                    assert rel_err(cdf_float(params, n), cdf(params, n)) < 1e-10
