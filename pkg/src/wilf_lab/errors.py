"""Error types shared across the package.

Every domain error derives from :class:`WilfLabError` and carries the process
exit code the command-line front end maps it to: 1 for ordinary domain errors,
3 for :class:`InternalInconsistency` (two routes to the same mathematical
quantity disagreed, which signals an implementation bug, never bad input).
Usage errors are handled by the CLI itself with exit code 2.
"""

from __future__ import annotations


class WilfLabError(Exception):
    """Base class for all domain errors raised by this package."""

    exit_code = 1


class EmptyInput(WilfLabError):
    """A generating set was required but none was given."""


class NotCofinite(WilfLabError):
    """The generators have gcd > 1, so the complement would be infinite."""


class NotAMember(WilfLabError):
    """An argument was required to be an element of the semigroup but is not."""


class NotAGap(WilfLabError):
    """An argument was required to be a gap of the semigroup but is not."""


class NotCoprime(WilfLabError):
    """A two-generator construction needs coprime generators."""


class NaturalsHasNoType(WilfLabError):
    """The type is undefined for the full monoid of naturals."""


class NaturalsUnsupported(WilfLabError):
    """The operation excludes the full monoid of naturals."""


class NoSuchSemimodule(WilfLabError):
    """A semimodule filter matched nothing."""


class ResourceLimit(WilfLabError):
    """A configured search budget was exhausted.

    ``partial`` holds whatever progress report the interrupted computation
    could assemble (shape depends on the caller).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InternalInconsistency(WilfLabError):
    """Two independent evaluations of the same quantity disagreed.

    This is never a user error: it means a theorem-level identity failed,
    i.e. the implementation itself is broken somewhere.
    """

    exit_code = 3
