"""Exception hierarchy shared by all modules.

DomainError covers bad user input (unsupported type, non-dominant weight,
weight outside a character lattice, malformed flags).  InternalError covers
violated internal invariants (inexact division, singular sample systems,
non-integral results where integrality is guaranteed); raising it signals a
bug, never a usage problem.  The CLI maps DomainError to exit code 2 and
InternalError to exit code 1.
"""

from __future__ import annotations

__all__ = ["WeightcalcError", "DomainError", "InternalError"]


class WeightcalcError(Exception):
    """Base class for all package errors."""


class DomainError(WeightcalcError):
    """Invalid input from the caller (CLI exit code 2)."""


class InternalError(WeightcalcError):
    """Broken internal invariant, i.e. a bug (CLI exit code 1)."""
