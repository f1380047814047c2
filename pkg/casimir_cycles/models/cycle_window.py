# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass
from typing import Callable, Optional

from casimir_numerics.exceptions import DomainError


@dataclass(frozen=True)
class CycleWindow:
    """Cycle lengths j in [x s(V), y s(V)].

    The scale is ``coefficient * V**exponent`` unless an explicit ``scale``
    callable is given. ``y`` may be ``math.inf`` for an open window.
    Endpoints are rounded outward.
    """

    x: float
    y: float
    exponent: float = 1.0
    coefficient: float = 1.0
    scale: Optional[Callable[[float], float]] = None

    def __post_init__(self):
        if not (self.x > 0 and self.y > self.x) or math.isnan(self.y):
            raise DomainError(
                "window needs 0 < x < y, got x=%r y=%r" % (self.x, self.y)
            )
        if self.scale is None and not self.exponent > 0:
            raise DomainError("window exponent must be > 0, got %r" % self.exponent)
        if not self.coefficient > 0:
            raise DomainError(
                "window coefficient must be > 0, got %r" % self.coefficient
            )

    @property
    def is_power(self):
        return self.scale is None

    @property
    def is_open(self):
        return math.isinf(self.y)

    def scale_at(self, volume):
        if self.scale is not None:
            return float(self.scale(volume))
        return self.coefficient * volume**self.exponent

    def bounds(self, volume):
        """(first, last) cycle lengths; ``last`` is None for open windows."""
        s = self.scale_at(volume)
        if not s > 0:
            raise DomainError("window scale must be > 0, got %r at V=%g" % (s, volume))
        first = max(int(math.floor(self.x * s)), 1)
        last = None if self.is_open else int(math.ceil(self.y * s))
        return first, last

    def label(self):
        if self.scale is not None:
            return "j in [%g, %g] * s(V)" % (self.x, self.y)
        return "j in [%g, %g] * %g V^%g" % (
            self.x,
            self.y,
            self.coefficient,
            self.exponent,
        )
