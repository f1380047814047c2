# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass
from enum import Enum

from casimir_numerics.exceptions import DomainError


class Regime(str, Enum):
    """How the condensate spreads over the box modes.

    TYPE_I: zero mode only. TYPE_II: infinitely many modes along the long
    axis, each macroscopic. TYPE_III: no mode macroscopic, condensate
    spread over a growing number of modes.
    """

    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    TYPE_III = "type_iii"

    def natural_exponent(self, alpha1=None):
        """Exponent delta of the scale V^delta where condensate cycles live."""
        if self is Regime.TYPE_III:
            if alpha1 is None:
                return math.nan
            return 2.0 * (1.0 - alpha1)
        return 1.0


class Verdict(str, Enum):
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    TYPE_III = "type_iii"
    NO_CONDENSATE = "no_condensate"
    INCONCLUSIVE = "inconclusive"

    @property
    def regime(self):
        try:
            return Regime(self.value)
        except ValueError:
            return None

    @classmethod
    def from_regime(cls, regime):
        return cls(regime.value)


@dataclass(frozen=True)
class CondensateConstants:
    """Limit of -beta_mu * V^delta and what it is solved from.

    ``constant`` is A (TYPE_I), B (TYPE_II) or C (TYPE_III). ``delta``
    is the decay exponent of -beta_mu: 1 for TYPE_I and TYPE_II, and
    2 (1 - alpha1) for TYPE_III when alpha1 is known.
    """

    regime: Regime
    constant: float
    delta: float
    rho0: float
    lam: float

    def __post_init__(self):
        if not (self.constant > 0 and math.isfinite(self.constant)):
            raise DomainError("condensate constant must be > 0, got %r" % self.constant)
        if not self.rho0 > 0:
            raise DomainError("rho0 must be > 0, got %r" % self.rho0)

    def beta_mu_asymptote(self, volume):
        """-beta_mu at a large volume: constant / V^delta."""
        return self.constant * volume**-self.delta
