"""How fast the without-replacement law approaches its geometric limit.

Hold the good fraction p = good/total fixed and let the urn grow: each
draw then barely changes the composition, and the first-success law tends
to the geometric distribution q^(n-1) p with q = 1 - p.  This module
measures that convergence with total-variation distance, reported together
with the largest single-point discrepancy.

The geometric tail mass beyond the urn law's finite support, q^(total-good+1),
is added in closed form, so the reported distance carries no truncation
error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import ParameterError
from .exact import UrnParams

__all__ = [
    "ConvergenceRecord",
    "geometric_pmf",
    "tv_distance",
    "convergence_table",
]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a convergence report: distances at a single urn size."""

    total: int
    good: int
    p: float
    tv_distance: float
    max_pointwise_error: float
    at_n: int


def geometric_pmf(p: float, n: int) -> float:
    """Geometric law on 1, 2, ...: probability (1-p)^(n-1) p."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParameterError(f"draw index must be an integer, got {n!r}")
    if n < 1:
        raise ParameterError(f"draw index must be >= 1, got {n}")
    if not 0.0 < p <= 1.0:
        raise ParameterError(f"p must lie in (0, 1], got {p!r}")
    return (1.0 - p) ** (n - 1) * p


def _tv_stats(params: UrnParams) -> tuple[float, float, int]:
    """(tv distance, max pointwise |pmf - geometric|, argmax n)."""
    total, good = params.total, params.good
    size = params.support_size
    p = good / total
    if good == total:
        return 0.0, 0.0, 1  # both laws are the point mass at 1
    q = 1.0 - p
    log_q = math.log1p(-p)
    # Beyond this index both laws underflow to exactly 0.0, so the absolute
    # difference is exactly zero and the scan can stop early.
    n_cut = min(size, int(800.0 / -log_q) + 3)
    abs_chunks = []
    max_err = 0.0
    at_n = 1
    start = 1
    while start <= n_cut:
        count = min(_CHUNK, n_cut - start + 1)
        ns = np.arange(start, start + count, dtype=np.float64)
        urn = _kernels.pmf_float_range(total, good, start, count)
        geom = np.power(q, ns - 1.0) * p
        diff = np.abs(urn - geom)
        abs_chunks.append(float(diff.sum()))
        i = int(diff.argmax())
        if diff[i] > max_err:
            max_err = float(diff[i])
            at_n = start + i
        start += count
    tail = q ** size  # geometric mass past the urn law's support
    tv = 0.5 * (math.fsum(abs_chunks) + tail)
    return min(1.0, tv), max_err, at_n


def tv_distance(params: UrnParams) -> float:
    """Total-variation distance to the geometric law with p = good/total."""
    return _tv_stats(params)[0]


def convergence_table(
    p: Fraction, totals: Sequence[int]
) -> list[ConvergenceRecord]:
    """Convergence report along a sequence of urn sizes at fixed p.

    ``p`` must be a rational in (0, 1) and every total must make
    ``total * p`` a whole number of good objects, so the fixed-fraction
    hypothesis holds exactly along the sequence.
    """
    if not isinstance(p, Fraction):
        raise ParameterError(f"p must be a Fraction, got {p!r}")
    if not 0 < p < 1:
        raise ParameterError(f"p must lie strictly between 0 and 1, got {p}")
    if not totals:
        raise ParameterError("totals must be non-empty")
    records = []
    for total in totals:
        if isinstance(total, bool) or not isinstance(total, int) or total < 1:
            raise ParameterError(f"totals must be positive integers, got {total!r}")
        good_times_den = total * p.numerator
        if good_times_den % p.denominator:
            raise ParameterError(
                f"total={total} is incompatible with p={p}: "
                f"{total} * {p} is not an integer"
            )
        good = good_times_den // p.denominator
        params = UrnParams(total=total, good=good)
        tv, max_err, at_n = _tv_stats(params)
        records.append(
            ConvergenceRecord(
                total=total,
                good=good,
                p=good / total,
                tv_distance=tv,
                max_pointwise_error=max_err,
                at_n=at_n,
            )
        )
    return records
