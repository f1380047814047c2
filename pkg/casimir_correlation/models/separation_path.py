# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from casimir_numerics.exceptions import DomainError, PathViolationError

# relative slack on the half-period check
_HALF_PERIOD_SLACK = 1e-12


@dataclass(frozen=True)
class SeparationPath:
    """Separation growing with the volume: X_nu(V) = x_nu V^{s_nu}.

    Paths must stay on the half-period 0 <= X_nu <= L_nu / 2 of every
    sampled box; they are rejected, never clamped.
    """

    coefficients: Tuple[float, float, float]
    exponents: Tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if len(self.coefficients) != 3 or len(self.exponents) != 3:
            raise DomainError(
                "a separation path needs three coefficients and exponents"
            )
        if any(not (x >= 0 and math.isfinite(x)) for x in self.coefficients):
            raise DomainError(
                "path coefficients must be finite and >= 0, got %r"
                % (self.coefficients,)
            )
        coefficients = tuple(float(x) for x in self.coefficients)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "exponents", tuple(float(s) for s in self.exponents))

    @classmethod
    def along(cls, axis, x, s):
        """x V^s on one axis, 0 on the others."""
        coefficients = [0.0, 0.0, 0.0]
        exponents = [0.0, 0.0, 0.0]
        coefficients[axis] = x
        exponents[axis] = s
        return cls(tuple(coefficients), tuple(exponents))

    @classmethod
    def fraction(cls, geom, fractions):
        """X_nu = f_nu L_nu, a fixed fraction of each side."""
        return cls(tuple(fractions), tuple(geom.alpha))

    def at(self, volume):
        pairs = zip(self.coefficients, self.exponents)
        return np.array([x * volume**s for x, s in pairs])

    def validate(self, geom, volumes):
        """Raise ``PathViolationError`` if X leaves a half-period on any volume."""
        for volume in volumes:
            X = self.at(volume)
            halves = np.array(geom.at_volume(volume).side_lengths) / 2.0
            over = X > halves * (1.0 + _HALF_PERIOD_SLACK)
            if np.any(over):
                axis = int(np.argmax(over))
                raise PathViolationError(
                    "Path %s leaves the half-period on axis %d at V=%g: "
                    "X=%.6g > L/2=%.6g"
                    % (self.label(), axis + 1, volume, X[axis], halves[axis])
                )

    def label(self):
        return "(" + ", ".join(
            "%g*V^%g" % (x, s) for x, s in zip(self.coefficients, self.exponents)
        ) + ")"
