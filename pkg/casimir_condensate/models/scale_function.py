# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass

from casimir_numerics.exceptions import DomainError

POWER = "power"
MODE_COUNT = "mode_count"


@dataclass(frozen=True)
class ScaleFunction:
    """Momentum cut eta(V) = coefficient * V^-exponent, decreasing to 0."""

    coefficient: float
    exponent: float
    kind: str = POWER

    def __post_init__(self):
        if not (self.coefficient > 0 and math.isfinite(self.coefficient)):
            raise DomainError(
                "scale coefficient must be > 0, got %r" % self.coefficient
            )
        if not (self.exponent > 0 and math.isfinite(self.exponent)):
            raise DomainError(
                "scale exponent must be > 0 so that eta decreases, got %r"
                % self.exponent
            )
        if self.kind not in (POWER, MODE_COUNT):
            raise DomainError("unknown scale kind %r" % self.kind)

    def __call__(self, volume):
        return self.coefficient * volume**-self.exponent

    @classmethod
    def threshold(cls, delta):
        """eta_delta(V) = 2 pi / V^(1/2 - delta)."""
        return cls(2.0 * math.pi, 0.5 - delta)

    @classmethod
    def mode_count(cls, gamma, exponent):
        """eta(V) = 2 pi gamma / V^exponent: |n1| <= gamma at the matching side."""
        return cls(2.0 * math.pi * gamma, exponent, MODE_COUNT)

    @property
    def gamma(self):
        return self.coefficient / (2.0 * math.pi)

    def max_energy(self, volume, lam):
        """beta eps of the cut: lam^2 eta^2 / (4 pi)."""
        eta = self(volume)
        return lam * lam * eta * eta / (4.0 * math.pi)
