# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass
from typing import Optional

from casimir_numerics.exceptions import DomainError


@dataclass(frozen=True)
class ThermoPoint:
    """Grand-canonical state of the gas at one volume.

    ``beta_mu`` is the dimensionless chemical potential beta * mu, always
    strictly negative in a finite box. ``rho`` is the density the state was
    solved for; it stays ``None`` for points built directly from beta_mu.
    """

    lam: float
    rho: Optional[float]
    beta_mu: float
    V: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0.0):
            raise DomainError("lambda must be > 0, got %r" % self.lam)
        if not (math.isfinite(self.beta_mu) and self.beta_mu < 0.0):
            raise DomainError("beta_mu must be < 0, got %r" % self.beta_mu)
        if not (math.isfinite(self.V) and self.V > 0.0):
            raise DomainError("V must be > 0, got %r" % self.V)
        if self.rho is not None and not (math.isfinite(self.rho) and self.rho > 0.0):
            raise DomainError("rho must be > 0, got %r" % self.rho)

    @property
    def fugacity(self):
        return math.exp(self.beta_mu)

    def check_geometry(self, geom):
        if not math.isclose(self.V, geom.V, rel_tol=1e-12):
            raise DomainError(
                "Thermo point at V=%r does not match the box volume %r"
                % (self.V, geom.V)
            )
