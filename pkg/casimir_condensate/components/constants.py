# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from scipy import optimize

from casimir_numerics import lattice_lorentz_sum
from casimir_numerics.exceptions import ConvergenceError

from ..models.regime import CondensateConstants, Regime
from .base import RegimeComponent


class ConstantSolver(RegimeComponent):
    """Solve the constant fixing -beta_mu V^delta from rho - rho_c."""

    _name = "condensate.constants.base"
    _usage = "condensate.constants"

    def solve(self):
        work = self.work
        return CondensateConstants(
            regime=work.regime,
            constant=self._solve_constant(),
            delta=work.regime.natural_exponent(work.alpha1),
            rho0=work.rho0,
            lam=work.lam,
        )

    def _solve_constant(self):
        raise NotImplementedError()

    def residual(self, constant):
        """Mismatch of the condensate density carried by ``constant``."""
        raise NotImplementedError()


class TypeIConstantSolver(ConstantSolver):
    _name = "condensate.constants.type_i"
    _regime = Regime.TYPE_I

    def _solve_constant(self):
        return 1.0 / self.work.rho0

    def residual(self, constant):
        return 1.0 / constant - self.work.rho0


class TypeIIConstantSolver(ConstantSolver):
    _name = "condensate.constants.type_ii"
    _regime = Regime.TYPE_II

    def residual(self, constant):
        return lattice_lorentz_sum(constant, self.work.lam) - self.work.rho0

    def _solve_constant(self):
        rho0 = self.work.rho0
        # the n = 0 term alone gives sum >= 1/B, so B = 1/rho0 is below the root
        lower = 1.0 / rho0
        upper = lower
        while self.residual(upper) > 0.0:
            upper *= 4.0
            if upper > 1e300:
                raise ConvergenceError("Could not bracket the TypeII constant")
        if upper == lower:
            return lower
        root = optimize.brentq(
            self.residual, upper / 4.0, upper, xtol=1e-300, rtol=8.9e-16
        )
        if abs(self.residual(root)) > 1e-12 * rho0:
            raise ConvergenceError(
                "TypeII constant did not converge",
                diagnostics={"B": root, "residual": self.residual(root)},
            )
        return root


class TypeIIIConstantSolver(ConstantSolver):
    _name = "condensate.constants.type_iii"
    _regime = Regime.TYPE_III

    def _solve_constant(self):
        lam = self.work.lam
        return math.pi / (lam * lam * self.work.rho0**2)

    def residual(self, constant):
        lam = self.work.lam
        return math.sqrt(math.pi) / (lam * math.sqrt(constant)) - self.work.rho0
