# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from casimir_condensate import Regime, RegimeComponent
from casimir_numerics import lattice_lorentz_cosine_sum
from casimir_numerics.exceptions import DomainError

EXPONENT_TOL = 1e-9


class LimitingProfile(RegimeComponent):
    """Limit of sigma_L along separations on the coherence scale.

    ``value(y)`` takes the separation in units of that scale: the side L1
    for TYPE_II, V^{delta/2} for TYPE_III. TYPE_I is flat.
    """

    _name = "correlation.profile.base"
    _usage = "correlation.profile"

    def coherence_exponent(self):
        """s such that sigma decays on separations of order V^s along axis 1."""
        raise NotImplementedError()

    def value(self, y):
        raise NotImplementedError()

    def path_limit(self, path):
        """Limit of sigma_L(X(V)) along a valid ``SeparationPath``.

        Only the first axis can leave the condensate's coherence scale.
        """
        consts = self._require_constants()
        x1, s1 = path.coefficients[0], path.exponents[0]
        scale = self.coherence_exponent()
        if x1 == 0.0 or s1 < scale - EXPONENT_TOL:
            return consts.rho0
        if s1 <= scale + EXPONENT_TOL:
            return self.value(x1)
        return 0.0


class TypeILimitingProfile(LimitingProfile):
    _name = "correlation.profile.type_i"
    _regime = Regime.TYPE_I

    def coherence_exponent(self):
        # never reached on the half-period
        return math.inf

    def value(self, y):
        return self._require_constants().rho0


class TypeIILimitingProfile(LimitingProfile):
    """sum_n cos(2 pi n y) / (B + pi lam^2 n^2), y = X1 / L1."""

    _name = "correlation.profile.type_ii"
    _regime = Regime.TYPE_II

    def coherence_exponent(self):
        return 0.5

    def value(self, y):
        consts = self._require_constants()
        return lattice_lorentz_cosine_sum(consts.constant, consts.lam, y)


class TypeIIILimitingProfile(LimitingProfile):
    """rho0 e^{-2 y sqrt(pi C) / lam}, y = X1 / V^{delta/2}."""

    _name = "correlation.profile.type_iii"
    _regime = Regime.TYPE_III

    def coherence_exponent(self):
        if self.work.alpha1 is None:
            raise DomainError("TypeIII coherence scale needs alpha1")
        return 1.0 - self.work.alpha1

    def value(self, y):
        consts = self._require_constants()
        if y < 0:
            raise DomainError("separation must be >= 0, got %r" % y)
        decay = 2.0 * math.sqrt(math.pi * consts.constant) / consts.lam
        return consts.rho0 * math.exp(-decay * y)
