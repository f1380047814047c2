# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

import numpy as np
from scipy import special

from casimir_condensate import Regime, RegimeComponent
from casimir_numerics.exceptions import DomainError

EXPONENT_TOL = 1e-9
# K_n x above which a term of the type II law is dropped
_EXP_CUT = 50.0


class WindowLaw(RegimeComponent):
    """Thermodynamic limit of the density in a scaled cycle window.

    Cycle windows on the scale V^delta only see the condensate when
    delta equals the natural exponent of the regime. Below it an open
    window holds the whole condensate and a bounded one nothing; above
    it every window is empty.
    """

    _name = "cycles.window_law.base"
    _usage = "cycles.window_law"

    def natural_exponent(self):
        exponent = self.work.regime.natural_exponent(self.work.alpha1)
        if math.isnan(exponent):
            raise DomainError("%s needs alpha1" % self._name)
        return exponent

    def window_limit(self, window):
        """Limit of sum_{j in window} rho_{L,j}; None for non power scales."""
        if not window.is_power:
            return None
        consts = self._require_constants()
        natural = self.natural_exponent()
        if window.exponent > natural + EXPONENT_TOL:
            return 0.0
        if window.exponent < natural - EXPONENT_TOL:
            return consts.rho0 if window.is_open else 0.0
        c = window.coefficient
        return self._law(c * window.x, c * window.y)

    def tail_limit(self, exponent, coefficient=1.0):
        """Limit of sum_{j >= coefficient V^exponent} rho_{L,j}."""
        natural = self.natural_exponent()
        if exponent > natural + EXPONENT_TOL:
            return 0.0
        if exponent < natural - EXPONENT_TOL:
            return self._require_constants().rho0
        return self._law(coefficient, math.inf)

    def _law(self, x, y):
        raise NotImplementedError()


class TypeIWindowLaw(WindowLaw):
    _name = "cycles.window_law.type_i"
    _regime = Regime.TYPE_I

    def _law(self, x, y):
        consts = self._require_constants()
        A = consts.constant
        return consts.rho0 * (math.exp(-x * A) - math.exp(-y * A))


class TypeIIWindowLaw(WindowLaw):
    """sum_n (e^{-x K_n} - e^{-y K_n}) / K_n with K_n = B + pi lam^2 n^2."""

    _name = "cycles.window_law.type_ii"
    _regime = Regime.TYPE_II

    def _law(self, x, y):
        consts = self._require_constants()
        B, lam = consts.constant, consts.lam
        reach = max(_EXP_CUT / x - B, 0.0) / (math.pi * lam * lam)
        n_max = int(math.ceil(math.sqrt(reach)))
        n = np.arange(-n_max, n_max + 1, dtype=float)
        K = B + math.pi * lam * lam * n * n
        terms = np.exp(-x * K)
        if not math.isinf(y):
            terms = terms - np.exp(-y * K)
        return float((terms / K).sum())


class TypeIIIWindowLaw(WindowLaw):
    _name = "cycles.window_law.type_iii"
    _regime = Regime.TYPE_III

    def _law(self, x, y):
        consts = self._require_constants()
        C = consts.constant
        upper = 1.0 if math.isinf(y) else special.erf(math.sqrt(C * y))
        return consts.rho0 * float(upper - special.erf(math.sqrt(C * x)))
