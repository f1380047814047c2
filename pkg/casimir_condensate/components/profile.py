# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from scipy import integrate

from casimir_numerics import erf_std, lattice_lorentz_partial
from casimir_numerics.exceptions import DomainError

from ..models.regime import Regime
from .base import RegimeComponent

# two exponents closer than this are the same threshold
EXPONENT_TOL = 1e-9


class CondensateProfile(RegimeComponent):
    """Thermodynamic-limit distribution of the condensate over modes."""

    _name = "condensate.profile.base"
    _usage = "condensate.profile"

    def zero_mode_fraction(self):
        """lim rho_L(0) / rho0."""
        raise NotImplementedError()

    def mode_limit(self, n1):
        """lim rho_L(k) for k = (2 pi n1 / L1, 0, 0)."""
        raise NotImplementedError()

    def scaled_limit(self, scale):
        """lim of the density in modes with |k| <= scale(V)."""
        raise NotImplementedError()


class TypeICondensateProfile(CondensateProfile):
    _name = "condensate.profile.type_i"
    _regime = Regime.TYPE_I

    def zero_mode_fraction(self):
        return 1.0

    def mode_limit(self, n1):
        return self._require_constants().rho0 if n1 == 0 else 0.0

    def scaled_limit(self, scale):
        return self._require_constants().rho0


class TypeIICondensateProfile(CondensateProfile):
    _name = "condensate.profile.type_ii"
    _regime = Regime.TYPE_II

    def zero_mode_fraction(self):
        consts = self._require_constants()
        return 1.0 / (consts.constant * consts.rho0)

    def mode_limit(self, n1):
        consts = self._require_constants()
        return 1.0 / (consts.constant + math.pi * consts.lam**2 * n1 * n1)

    def scaled_limit(self, scale):
        consts = self._require_constants()
        if scale.exponent < 0.5 - EXPONENT_TOL:
            return consts.rho0
        if scale.exponent > 0.5 + EXPONENT_TOL:
            return 1.0 / consts.constant
        n_max = int(math.floor(scale.gamma + EXPONENT_TOL))
        return lattice_lorentz_partial(consts.constant, consts.lam, n_max).value


class TypeIIICondensateProfile(CondensateProfile):
    _name = "condensate.profile.type_iii"
    _regime = Regime.TYPE_III

    def zero_mode_fraction(self):
        return 0.0

    def mode_limit(self, n1):
        return 0.0

    def scaled_limit(self, scale):
        consts = self._require_constants()
        if self.work.alpha1 is None:
            raise DomainError("TypeIII scaled limits need alpha1")
        threshold = 1.0 - self.work.alpha1
        if scale.exponent < threshold - EXPONENT_TOL:
            return consts.rho0
        if scale.exponent > threshold + EXPONENT_TOL:
            return 0.0
        return self.window_integral(scale.gamma)

    def window_integral(self, gamma):
        """int_0^oo e^{-C z} z^{-1/2} erf(gamma lam sqrt(pi z)) dz / lam.

        Integrated in s = sqrt(z) to remove the endpoint singularity.
        """
        consts = self._require_constants()
        C, lam = consts.constant, consts.lam
        root_pi = math.sqrt(math.pi)

        def integrand(s):
            return 2.0 * math.exp(-C * s * s) * erf_std(gamma * lam * root_pi * s)

        value, _err = integrate.quad(
            integrand, 0.0, math.inf, epsabs=1e-14, epsrel=1e-12
        )
        return value / lam
