"""Command-line front end: tables, statistics, samples, convergence reports
and self-checks, as CSV or JSON on stdout.

Exit codes: 0 success, 2 usage or validation error, 3 resource guard
tripped, 4 self-check failure.  Diagnostics go to stderr.  The environment
variable URN_SEED supplies a default sampling seed (an explicit --seed
always wins); URN_BACKEND picks the numeric backend (see README).
"""

from __future__ import annotations

import functools
import json
import os
import sys
from fractions import Fraction

import click

from . import checks as checks_mod
from .convergence import convergence_table
from .errors import ParameterError, ResourceGuardError, UrnError
from .exact import UrnParams, mean, median, mode, pmf_table, support, variance
from .floats import cdf_float, pmf_float
from .rng import SamplerState
from .sampler import sample_inverse_cdf_batch, sample_urn_walk_batch

__all__ = ["cli", "main"]

_TABLE_ROWS_LIMIT = 10**6
_ECHO_CHUNK = 8192


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _f17(value: float) -> str:
    return f"{value:.17g}"


def _emit_json(params_obj: dict, rows: list) -> None:
    payload = {"schema_version": 1, "params": params_obj, "rows": rows}
    click.echo(json.dumps(payload, indent=2))


def _emit_csv(header: str, lines) -> None:
    out = sys.stdout
    out.write(header + "\n")
    chunk: list[str] = []
    for line in lines:
        chunk.append(line)
        if len(chunk) >= _ECHO_CHUNK:
            out.write("\n".join(chunk) + "\n")
            chunk.clear()
    if chunk:
        out.write("\n".join(chunk) + "\n")
    out.flush()


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ResourceGuardError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (ParameterError, UrnError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("URN_SEED")
    if env is not None:
        try:
            return int(env, 0)
        except ValueError:
            raise ParameterError(f"URN_SEED must be an integer, got {env!r}")
    return 0


_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
    help="Output format on stdout.",
)


@click.group()
def cli() -> None:
    """Draws-until-first-success distribution for an urn sampled without
    replacement: exact tables, statistics, samplers and verification."""


@cli.command("table")
@click.option("--n", "total", type=int, required=True, help="Total objects in the urn.")
@click.option("--k", "good", type=int, required=True, help="Number of good objects.")
@_format_option
@_guarded
def cmd_table(total: int, good: int, fmt: str) -> None:
    """Full distribution table: one row per support point."""
    params = UrnParams(total=total, good=good)
    if params.support_size > _TABLE_ROWS_LIMIT:
        raise ResourceGuardError(
            f"support size {params.support_size} exceeds the table limit "
            f"of {_TABLE_ROWS_LIMIT} rows"
        )
    table = pmf_table(params)

    def rows():
        prefix = Fraction(0)
        for n, p_exact in enumerate(table.probabilities, start=1):
            prefix += p_exact
            yield n, p_exact, pmf_float(params, n), prefix, cdf_float(params, n)

    if fmt == "json":
        _emit_json(
            {"n": total, "k": good},
            [
                {
                    "n": n,
                    "pmf_exact": _frac(pe),
                    "pmf_float": pf,
                    "cdf_exact": _frac(ce),
                    "cdf_float": cf,
                }
                for n, pe, pf, ce, cf in rows()
            ],
        )
    else:
        _emit_csv(
            "n,pmf_exact,pmf_float,cdf_exact,cdf_float",
            (
                f"{n},{_frac(pe)},{_f17(pf)},{_frac(ce)},{_f17(cf)}"
                for n, pe, pf, ce, cf in rows()
            ),
        )


@cli.command("stats")
@click.option("--n", "total", type=int, required=True, help="Total objects in the urn.")
@click.option("--k", "good", type=int, required=True, help="Number of good objects.")
@_format_option
@_guarded
def cmd_stats(total: int, good: int, fmt: str) -> None:
    """Summary statistics: mean, variance, median, mode and support."""
    params = UrnParams(total=total, good=good)
    modes = sorted(mode(params))
    sup = support(params)
    if fmt == "json":
        _emit_json(
            {"n": total, "k": good},
            [
                {
                    "mean": _frac(mean(params)),
                    "variance": _frac(variance(params)),
                    "median": median(params),
                    "mode": modes,
                    "support": [sup.start, sup.stop - 1],
                }
            ],
        )
    else:
        _emit_csv(
            "mean,variance,median,mode,support",
            [
                ",".join(
                    (
                        _frac(mean(params)),
                        _frac(variance(params)),
                        str(median(params)),
                        " ".join(map(str, modes)),
                        f"{sup.start}..{sup.stop - 1}",
                    )
                )
            ],
        )


@cli.command("sample")
@click.option("--n", "total", type=int, required=True, help="Total objects in the urn.")
@click.option("--k", "good", type=int, required=True, help="Number of good objects.")
@click.option("--count", type=click.IntRange(min=1), required=True, help="Number of draws.")
@click.option("--seed", type=int, default=None, help="RNG seed [default: $URN_SEED or 0].")
@click.option(
    "--method",
    type=click.Choice(["urn", "inverse"]),
    default="urn",
    show_default=True,
    help="urn: simulate the shrinking urn; inverse: invert the cdf.",
)
@_format_option
@_guarded
def cmd_sample(
    total: int, good: int, count: int, seed: int | None, method: str, fmt: str
) -> None:
    """Draw variates; the stream is a pure function of (seed, method)."""
    params = UrnParams(total=total, good=good)
    seed = _resolve_seed(seed)
    state = SamplerState(seed=seed)
    if method == "urn":
        values = sample_urn_walk_batch(params, state, count)
    else:
        values = sample_inverse_cdf_batch(params, state, count)
    if fmt == "json":
        _emit_json(
            {"n": total, "k": good, "count": count, "seed": seed, "method": method},
            [int(v) for v in values],
        )
    else:
        _emit_csv("value", (str(int(v)) for v in values))


@cli.command("converge")
@click.option("--p-num", type=int, required=True, help="Numerator of the good fraction p.")
@click.option("--p-den", type=int, required=True, help="Denominator of the good fraction p.")
@click.option(
    "--ns",
    "totals_csv",
    type=str,
    required=True,
    help="Comma-separated urn sizes, e.g. 100,1000,10000.",
)
@_format_option
@_guarded
def cmd_converge(p_num: int, p_den: int, totals_csv: str, fmt: str) -> None:
    """Distance to the geometric law along a sequence of urn sizes."""
    if p_den <= 0 or p_num <= 0:
        raise ParameterError(
            f"p must be a positive rational, got {p_num}/{p_den}"
        )
    p = Fraction(p_num, p_den)
    try:
        totals = [int(part) for part in totals_csv.split(",") if part.strip()]
    except ValueError:
        raise ParameterError(f"--ns must be comma-separated integers, got {totals_csv!r}")
    records = convergence_table(p, totals)
    if fmt == "json":
        _emit_json(
            {"p": _frac(p), "ns": totals},
            [
                {
                    "N": r.total,
                    "K": r.good,
                    "p": r.p,
                    "tv_distance": r.tv_distance,
                    "max_pointwise_error": r.max_pointwise_error,
                    "at_n": r.at_n,
                }
                for r in records
            ],
        )
    else:
        _emit_csv(
            "N,K,p,tv_distance,max_pointwise_error,at_n",
            (
                f"{r.total},{r.good},{_f17(r.p)},{_f17(r.tv_distance)},"
                f"{_f17(r.max_pointwise_error)},{r.at_n}"
                for r in records
            ),
        )


@cli.command("check")
@click.option(
    "--max-n",
    "max_total",
    type=click.IntRange(min=1),
    default=12,
    show_default=True,
    help="Upper bound of the verification sweep.",
)
@click.option(
    "--force",
    is_flag=True,
    help="Lift the enumeration size guard (expensive above the default).",
)
@_format_option
@_guarded
def cmd_check(max_total: int, force: bool, fmt: str) -> None:
    """Run the self-verification families and report pass/fail counts."""
    results = checks_mod.run_all(max_total, force=force)
    if fmt == "json":
        _emit_json(
            {"max_n": max_total, "force": force},
            [
                {
                    "family": r.name,
                    "cases": r.cases,
                    "failures": len(r.failures),
                    "first_failure": r.failures[0] if r.failures else None,
                }
                for r in results
            ],
        )
    else:
        _emit_csv(
            "family,cases,failures,first_failure",
            (
                f"{r.name},{r.cases},{len(r.failures)},"
                f"{r.failures[0] if r.failures else ''}"
                for r in results
            ),
        )
    failed = [r for r in results if not r.ok]
    if failed:
        for r in failed:
            click.echo(f"check failed [{r.name}]: {r.failures[0]}", err=True)
        sys.exit(4)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
