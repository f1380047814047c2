# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).


class CasimirError(Exception):
    """Base class for every error raised by the Casimir lab."""


class DomainError(CasimirError, ValueError):
    """Thrown when an argument lies outside the domain of an operation."""


class ConvergenceError(CasimirError):
    """Thrown when a series, root search or fit cannot reach its tolerance."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class InconclusiveError(CasimirError):
    """Thrown when finite-size evidence does not support a decision."""


class PathViolationError(DomainError):
    """Thrown when a separation path leaves the half-period of the box."""


class EmptyWindowError(DomainError):
    """Thrown when a cycle window contains no admissible length."""


class SweepError(CasimirError):
    """Thrown when a volume sweep aborts.

    Values computed before the failure are kept in ``partial``
    as a list of ``(volume, value)`` pairs.
    """

    def __init__(self, message, volume=None, partial=None):
        super().__init__(message)
        self.volume = volume
        self.partial = list(partial or [])


class NoComponentError(CasimirError):
    """Thrown when no component matches a usage and regime."""


class CostModelWarning(UserWarning):
    """Emitted when an explicit evaluation would exceed its cost budget."""
