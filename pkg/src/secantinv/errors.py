"""Exception taxonomy shared by all modules.

Two families matter to callers (and fix the CLI exit codes): ``UsageError``
covers bad inputs or requests outside a theorem's hypotheses, while
``InternalCheckError`` signals that a built-in cross-check failed, which is
never a valid state and always an implementation bug.
"""

from __future__ import annotations


class SecantInvError(Exception):
    """Base class for every error raised by this package."""


class UsageError(SecantInvError):
    """Invalid input or a request outside the supported hypotheses."""


class InternalCheckError(SecantInvError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class DomainError(UsageError):
    """Parameters violate a domain bound such as d >= 2g+2k+1."""


class StratumOutOfRange(UsageError):
    """Stratum index outside 0..k for the given secant order."""


class AmbiguousBundle(UsageError):
    """Cohomology of a line bundle in the special degree range 0..2g-2 is
    not determined by its degree; the caller must supply h1 explicitly."""


class GeneratorDegreeUnknown(UsageError):
    """Generation in degree k+2 is only guaranteed for d >= 2g+2k+2; at the
    boundary d = 2g+2k+1 the generator-count formula is not asserted."""


class DuplicateNode(UsageError):
    """Two interpolation nodes share an abscissa."""


class NonvanishingTail(InternalCheckError):
    """A finite-difference numerator failed to terminate where the input was
    promised to agree with a polynomial."""


class InternalMismatch(InternalCheckError):
    """Two independent computations of the same quantity disagree."""
