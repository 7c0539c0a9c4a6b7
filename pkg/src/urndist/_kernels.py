"""Hot numeric kernels: jitted numba implementations with numpy fallbacks.

Everything here is batch-oriented: drawing many variates or evaluating the
mass function over a block of support points.  Two interchangeable
implementations exist for each kernel,

* ``numba``: scalar loops compiled with ``@njit`` (the default when numba
  imports cleanly), and
* ``numpy``: vectorized array code with no compilation step.

Select one explicitly with the environment variable ``URN_BACKEND=numba``
or ``URN_BACKEND=numpy``; unset means numba-if-available.  The sampling
kernels are counter-based (see :mod:`urndist.rng`), so both backends emit
bit-identical sample streams; the mass-function kernels agree to a few
ulps but not bitwise (libm lgamma vs scipy's).

``benchmarks/bench_backends.py`` times the two implementations side by
side.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np
from scipy.special import gammaln

from .floats import _DIRECT_TERMS, _log_fail_direct
from .rng import GOLDEN_GAMMA, MASK64, U53

__all__ = [
    "active_backend",
    "available_backends",
    "urn_walk_batch",
    "inverse_cdf_table_batch",
    "uniform_block",
    "pmf_float_range",
    "IMPLEMENTATIONS",
]

_GAMMA_U = np.uint64(GOLDEN_GAMMA)
_MUL1_U = np.uint64(0xBF58476D1CE4E5B9)
_MUL2_U = np.uint64(0x94D049BB133111EB)
_U30 = np.uint64(30)
_U27 = np.uint64(27)
_U31 = np.uint64(31)
_U11 = np.uint64(11)
_U1 = np.uint64(1)


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def _mix64_np(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> _U30)) * _MUL1_U
    z = (z ^ (z >> _U27)) * _MUL2_U
    return z ^ (z >> _U31)


def _draw_roots_np(seed: int, draw0: int, count: int) -> np.ndarray:
    d = np.arange(draw0, draw0 + count, dtype=np.uint64)
    return _mix64_np(np.uint64(seed & MASK64) + (d + _U1) * _GAMMA_U)


def _uniform_block_numpy(seed: int, draw0: int, count: int) -> np.ndarray:
    words = _mix64_np(_draw_roots_np(seed, draw0, count) + _U1 * _GAMMA_U)
    return (words >> _U11).astype(np.float64) * U53


def _urn_walk_batch_numpy(
    total: int, good: int, seed: int, draw0: int, count: int
) -> np.ndarray:
    out = np.zeros(count, dtype=np.int64)
    alive = np.arange(count, dtype=np.int64)
    roots = _draw_roots_np(seed, draw0, count)
    step = 1
    while alive.size:
        p_step = good / (total - step + 1)
        # fold the step offset in python ints: numpy scalar uint64 would warn
        offset = np.uint64((step * GOLDEN_GAMMA) & MASK64)
        words = _mix64_np(roots + offset)
        u = (words >> _U11).astype(np.float64) * U53
        hit = u < p_step
        out[alive[hit]] = step
        roots = roots[~hit]
        alive = alive[~hit]
        step += 1  # at step == total-good+1, p_step == 1.0 and everything hits
    return out


def _inverse_cdf_table_batch_numpy(
    cdf_table: np.ndarray, seed: int, draw0: int, count: int
) -> np.ndarray:
    u = _uniform_block_numpy(seed, draw0, count)
    # first index with cdf_table[idx] > u; last entry is exactly 1.0 > u
    return np.searchsorted(cdf_table, u, side="right").astype(np.int64) + 1


def _pmf_float_range_numpy(
    total: int, good: int, n_start: int, count: int
) -> np.ndarray:
    ns = np.arange(n_start, n_start + count, dtype=np.int64)
    ms = ns - 1  # failures before the success at draw n
    lf = np.empty(count, dtype=np.float64)
    if good <= _DIRECT_TERMS:
        acc = np.zeros(count, dtype=np.float64)
        mf = ms.astype(np.float64)
        for j in range(good):
            acc += np.log1p(-mf / float(total - j))
        lf = acc
    else:
        direct = ms <= _DIRECT_TERMS
        for i in np.nonzero(direct)[0]:
            lf[i] = _log_fail_direct(total, good, int(ms[i]))
        rest = ~direct
        if rest.any():
            mr = ms[rest].astype(np.float64)
            lf[rest] = (
                gammaln(total - mr + 1.0)
                - gammaln(total - mr - good + 1.0)
                - gammaln(total + 1.0)
                + gammaln(total - good + 1.0)
            )
    return np.exp(lf) * (good / (total - ns.astype(np.float64) + 1.0))


_NUMPY_IMPLS = {
    "uniform_block": _uniform_block_numpy,
    "urn_walk_batch": _urn_walk_batch_numpy,
    "inverse_cdf_table_batch": _inverse_cdf_table_batch_numpy,
    "pmf_float_range": _pmf_float_range_numpy,
}


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

if _HAVE_NUMBA:

    @njit(cache=True)
    def _mix64_nb(z):
        z = (z ^ (z >> _U30)) * _MUL1_U
        z = (z ^ (z >> _U27)) * _MUL2_U
        return z ^ (z >> _U31)

    @njit(cache=True)
    def _uniform_block_nb(seed, draw0, count):
        out = np.empty(count, dtype=np.float64)
        for t in range(count):
            root = _mix64_nb(seed + (draw0 + np.uint64(t) + _U1) * _GAMMA_U)
            word = _mix64_nb(root + _U1 * _GAMMA_U)
            out[t] = np.float64(word >> _U11) * U53
        return out

    @njit(cache=True)
    def _urn_walk_batch_nb(total, good, seed, draw0, count):
        out = np.empty(count, dtype=np.int64)
        for t in range(count):
            root = _mix64_nb(seed + (draw0 + np.uint64(t) + _U1) * _GAMMA_U)
            step = 1
            while True:
                word = _mix64_nb(root + np.uint64(step) * _GAMMA_U)
                u = np.float64(word >> _U11) * U53
                if u < good / (total - step + 1):
                    out[t] = step
                    break
                step += 1
        return out

    @njit(cache=True)
    def _inverse_cdf_table_batch_nb(cdf_table, seed, draw0, count):
        out = np.empty(count, dtype=np.int64)
        size = cdf_table.size
        for t in range(count):
            root = _mix64_nb(seed + (draw0 + np.uint64(t) + _U1) * _GAMMA_U)
            word = _mix64_nb(root + _U1 * _GAMMA_U)
            u = np.float64(word >> _U11) * U53
            lo = 0
            hi = size
            while lo < hi:  # leftmost index with cdf_table[idx] > u
                mid = (lo + hi) // 2
                if cdf_table[mid] > u:
                    hi = mid
                else:
                    lo = mid + 1
            out[t] = lo + 1
        return out

    @njit(cache=True)
    def _pmf_float_range_nb(total, good, n_start, count):
        out = np.empty(count, dtype=np.float64)
        lg_all = math.lgamma(total + 1.0)
        lg_bad = math.lgamma(total - good + 1.0)
        for i in range(count):
            n = n_start + i
            m = n - 1
            if min(m, good) <= _DIRECT_TERMS:
                lf = 0.0
                if m <= good:
                    for j in range(m):
                        lf += math.log1p(-good / (total - j))
                else:
                    for j in range(good):
                        lf += math.log1p(-m / (total - j))
            else:
                lf = (
                    math.lgamma(total - m + 1.0)
                    - math.lgamma(total - m - good + 1.0)
                    - lg_all
                    + lg_bad
                )
            out[i] = math.exp(lf) * (good / (total - n + 1.0))
        return out

    def _as_u64(value: int) -> np.uint64:
        return np.uint64(value & MASK64)

    _NUMBA_IMPLS = {
        "uniform_block": lambda seed, draw0, count: _uniform_block_nb(
            _as_u64(seed), _as_u64(draw0), count
        ),
        "urn_walk_batch": lambda total, good, seed, draw0, count: _urn_walk_batch_nb(
            total, good, _as_u64(seed), _as_u64(draw0), count
        ),
        "inverse_cdf_table_batch": lambda table, seed, draw0, count: (
            _inverse_cdf_table_batch_nb(table, _as_u64(seed), _as_u64(draw0), count)
        ),
        "pmf_float_range": _pmf_float_range_nb,
    }
else:
    _NUMBA_IMPLS = {}

IMPLEMENTATIONS: dict[str, dict] = {"numpy": _NUMPY_IMPLS}
if _HAVE_NUMBA:
    IMPLEMENTATIONS["numba"] = _NUMBA_IMPLS


def _select_backend() -> str:
    requested = os.environ.get("URN_BACKEND", "").strip().lower()
    if requested and requested not in ("numba", "numpy"):
        warnings.warn(
            f"URN_BACKEND={requested!r} is not one of 'numba'/'numpy'; "
            "falling back to automatic selection",
            RuntimeWarning,
            stacklevel=2,
        )
        requested = ""
    if requested == "numba" and not _HAVE_NUMBA:
        warnings.warn(
            "URN_BACKEND=numba requested but numba is not importable; "
            "using the numpy backend",
            RuntimeWarning,
            stacklevel=2,
        )
        requested = "numpy"
    if requested:
        return requested
    return "numba" if _HAVE_NUMBA else "numpy"


_BACKEND = _select_backend()
_ACTIVE = IMPLEMENTATIONS[_BACKEND]


def active_backend() -> str:
    """Name of the implementation set serving the public kernel functions."""
    return _BACKEND


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(IMPLEMENTATIONS))


def uniform_block(seed: int, draw0: int, count: int) -> np.ndarray:
    """One uniform in [0, 1) per draw index draw0..draw0+count-1 (step 0)."""
    return _ACTIVE["uniform_block"](seed, draw0, count)


def urn_walk_batch(
    total: int, good: int, seed: int, draw0: int, count: int
) -> np.ndarray:
    """Simulate ``count`` shrinking-urn walks; element t is the first-success
    draw index of substream draw0+t."""
    return _ACTIVE["urn_walk_batch"](total, good, seed, draw0, count)


def inverse_cdf_table_batch(
    cdf_table: np.ndarray, seed: int, draw0: int, count: int
) -> np.ndarray:
    """Invert a tabulated cdf at one uniform per draw: smallest n with
    cdf_table[n-1] > u.  The table must end in exactly 1.0."""
    return _ACTIVE["inverse_cdf_table_batch"](cdf_table, seed, draw0, count)


def pmf_float_range(total: int, good: int, n_start: int, count: int) -> np.ndarray:
    """Float mass function over the support block n_start..n_start+count-1."""
    return _ACTIVE["pmf_float_range"](total, good, n_start, count)
