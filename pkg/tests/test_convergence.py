"""Convergence diagnostics against brute-force references."""

import math
from fractions import Fraction

import pytest

from urndist import (
    ConvergenceRecord,
    ParameterError,
    UrnParams,
    convergence_table,
    geometric_pmf,
    pmf_float,
    pmf_table,
    tv_distance,
)


class TestGeometricPmf:
    def test_certain_success(self):
        assert geometric_pmf(1.0, 1) == 1.0

    def test_half(self):
        assert geometric_pmf(0.5, 3) == 0.125

    def test_head_value(self):
        assert geometric_pmf(0.1, 1) == 0.1

    def test_domain_errors(self):
        for bad_p in (0.0, -0.5, 1.5):
            with pytest.raises(ParameterError):
                geometric_pmf(bad_p, 1)
        with pytest.raises(ParameterError):
            geometric_pmf(0.5, 0)


class TestTvDistance:
    def test_point_mass_coincides(self):
        assert tv_distance(UrnParams(5, 5)) == 0.0

    def test_matches_brute_force(self):
        # oracle: exact pmf to float, pointwise |difference|, closed tail
        params = UrnParams(10, 1)
        p = 1 / 10
        table = pmf_table(params)
        brute = 0.5 * (
            math.fsum(
                abs(float(table.probability(n)) - geometric_pmf(p, n))
                for n in range(1, 11)
            )
            + (1 - p) ** 10
        )
        assert tv_distance(params) == pytest.approx(brute, rel=1e-9)
        assert 0.0 < tv_distance(params) < 1.0

    @pytest.mark.parametrize(
        "total,good", [(17, 4), (100, 10), (1000, 3), (64, 64), (2, 1)]
    )
    def test_valid_metric_value(self, total, good):
        assert 0.0 <= tv_distance(UrnParams(total, good)) <= 1.0

    def test_strictly_decreasing_along_growth(self):
        distances = [
            tv_distance(UrnParams(total, total // 10))
            for total in (50, 500, 5000)
        ]
        assert distances[0] > distances[1] > distances[2]


class TestConvergenceTable:
    def test_single_row_plumbing(self):
        records = convergence_table(Fraction(1, 10), [100])
        assert len(records) == 1
        record = records[0]
        assert isinstance(record, ConvergenceRecord)
        assert (record.total, record.good) == (100, 10)
        assert record.p == pytest.approx(0.1)
        assert record.at_n in range(1, 92)
        assert record.max_pointwise_error >= 0.0

    def test_rows_keep_given_order_and_decrease(self):
        records = convergence_table(Fraction(1, 10), [10000, 100, 1000])
        assert [r.total for r in records] == [10000, 100, 1000]
        by_total = {r.total: r.tv_distance for r in records}
        assert by_total[100] > by_total[1000] > by_total[10000]

    def test_smallest_case(self):
        records = convergence_table(Fraction(1, 2), [2])
        assert (records[0].total, records[0].good) == (2, 1)

    def test_indivisible_total_is_named(self):
        with pytest.raises(ParameterError, match="total=100"):
            convergence_table(Fraction(1, 3), [100])

    def test_unreduced_fraction_is_normalized(self):
        # 2/20 reduces to 1/10, so 30 is compatible
        records = convergence_table(Fraction(2, 20), [30])
        assert records[0].good == 3

    def test_p_domain(self):
        with pytest.raises(ParameterError):
            convergence_table(Fraction(0), [10])
        with pytest.raises(ParameterError):
            convergence_table(Fraction(1), [10])
        with pytest.raises(ParameterError):
            convergence_table(0.1, [10])

    def test_empty_totals_rejected(self):
        with pytest.raises(ParameterError):
            convergence_table(Fraction(1, 10), [])


class TestPointwiseLimit:
    def test_head_errors_shrink_with_growth(self):
        # for n >= 2 the single-point errors decay roughly like 1/total
        p = 0.1
        for n in range(2, 11):
            errors = [
                abs(
                    pmf_float(UrnParams(total, total // 10), n)
                    - geometric_pmf(p, n)
                )
                for total in (100, 1000, 10000)
            ]
            assert errors[0] > errors[1] > errors[2]

    def test_first_point_coincides_exactly(self):
        # both laws put exactly good/total = p on n = 1
        for total in (100, 1000, 10000):
            assert pmf_float(UrnParams(total, total // 10), 1) == 0.1
