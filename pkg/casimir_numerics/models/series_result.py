# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass

from ..exceptions import DomainError

DEFAULT_ABS_TOL = 1e-15
DEFAULT_REL_TOL = 1e-13


@dataclass(frozen=True)
class SeriesTolerance:
    """Stopping rule shared by every truncated series.

    A series stops once ``tail_bound <= max(abs_tol, rel_tol * |partial|)``.
    """

    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    max_terms: int = 10_000_000

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise DomainError("Tolerances must be non negative")
        if not self.abs_tol and not self.rel_tol:
            raise DomainError("At least one tolerance must be positive")

    def reached(self, tail_bound, partial):
        return tail_bound <= max(self.abs_tol, self.rel_tol * abs(partial))


@dataclass(frozen=True)
class SeriesResult:
    """Truncated sum with a certified bound on the omitted tail."""

    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        if not (self.tail_bound >= 0) or math.isnan(self.tail_bound):
            raise DomainError("tail_bound must be >= 0, got %r" % (self.tail_bound,))
        if self.terms_used < 1:
            raise DomainError("terms_used must be >= 1, got %r" % (self.terms_used,))

    def __float__(self):
        return float(self.value)

    def __add__(self, other):
        if not isinstance(other, SeriesResult):
            return NotImplemented
        return SeriesResult(
            self.value + other.value,
            self.tail_bound + other.tail_bound,
            self.terms_used + other.terms_used,
        )

    def scaled(self, factor):
        factor = float(factor)
        return SeriesResult(
            self.value * factor, self.tail_bound * abs(factor), self.terms_used
        )
