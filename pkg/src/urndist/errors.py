"""Exception hierarchy shared by the whole package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific class that applies rather than bare ValueError.
"""

from __future__ import annotations


class UrnError(Exception):
    """Base class for all errors raised by urndist."""


class ParameterError(UrnError, ValueError):
    """Inputs violate a contract: wrong type, wrong range, wrong domain."""


class ResourceGuardError(UrnError, RuntimeError):
    """A computation was refused because it would exceed a size guard."""
