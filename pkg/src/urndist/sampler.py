"""Random variate generation by two independent methods.

``sample_urn_walk`` simulates the urn draw by draw: at step k, after k-1
failures, the success chance is good/(total-k+1).  ``sample_inverse_cdf``
inverts the floating-point cdf at a uniform instead.  The two methods
share nothing but the uniform stream, which makes them useful as
cross-checks of each other and of the closed forms.

Both consume one substream per variate from the counter-based generator in
:mod:`urndist.rng`, so results depend only on (seed, draw_index, method) -
not on batch sizes, backend choice, or platform.  A ``SamplerState`` is
single-owner: it mutates as draws are consumed.  Use
:meth:`urndist.rng.SamplerState.spawn` to fan out to parallel workers.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import ParameterError
from .exact import UrnParams
from .floats import cdf_float
from .rng import SamplerState, draw_root, step_uniform

__all__ = [
    "inverse_cdf",
    "sample_urn_walk",
    "sample_urn_walk_batch",
    "sample_inverse_cdf",
    "sample_inverse_cdf_batch",
]

# Above this support size the batch inverse sampler stops tabulating the cdf
# and scans per draw instead (the table would cost more than the draws).
_TABLE_LIMIT = 1 << 22


def _require_count(count: int) -> None:
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise ParameterError(f"count must be a positive integer, got {count!r}")


def sample_urn_walk_batch(
    params: UrnParams, state: SamplerState, count: int
) -> np.ndarray:
    """Draw ``count`` variates by direct simulation of the shrinking urn."""
    _require_count(count)
    draw0 = state.take(count)
    return _kernels.urn_walk_batch(
        params.total, params.good, state.seed, draw0, count
    )


def sample_urn_walk(params: UrnParams, state: SamplerState) -> int:
    """One variate by direct simulation; always in 1..total-good+1."""
    return int(sample_urn_walk_batch(params, state, 1)[0])


def inverse_cdf(params: UrnParams, u: float) -> int:
    """Smallest n with cdf_float(n) > u, for u in [0, 1).

    This is the quantile map used by the inversion sampler.  Linear scan
    from n = 1; the expected scan length equals the distribution mean, so
    it is cheap whenever good is not vanishingly rare.
    """
    if not 0.0 <= u < 1.0:
        raise ParameterError(f"u must lie in [0, 1), got {u!r}")
    n = 1
    while cdf_float(params, n) <= u:
        n += 1
    return n


def _cdf_table(params: UrnParams) -> np.ndarray:
    # Entries are exactly the scalar cdf_float values, so table lookups and
    # the scan in inverse_cdf can never disagree.
    table = np.empty(params.support_size, dtype=np.float64)
    for n in range(1, params.support_size + 1):
        table[n - 1] = cdf_float(params, n)
    return table


def sample_inverse_cdf_batch(
    params: UrnParams, state: SamplerState, count: int
) -> np.ndarray:
    """Draw ``count`` variates by cdf inversion.

    For tabulatable supports the cdf is evaluated once and inverted by
    binary search per draw; otherwise each draw scans from n = 1.
    """
    _require_count(count)
    draw0 = state.take(count)
    if params.support_size <= _TABLE_LIMIT:
        table = _cdf_table(params)
        return _kernels.inverse_cdf_table_batch(table, state.seed, draw0, count)
    out = np.empty(count, dtype=np.int64)
    for t in range(count):
        u = step_uniform(draw_root(state.seed, draw0 + t), 0)
        out[t] = inverse_cdf(params, u)
    return out


def sample_inverse_cdf(params: UrnParams, state: SamplerState) -> int:
    """One variate by cdf inversion; always in 1..total-good+1."""
    draw = state.take(1)
    u = step_uniform(draw_root(state.seed, draw), 0)
    return inverse_cdf(params, u)
