# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import functools
import logging
import math

from scipy import optimize

from casimir_numerics.exceptions import ConvergenceError, DomainError

from .lattice_plan import get_plan
from .models.thermo_point import ThermoPoint

_logger = logging.getLogger(__name__)

DEFAULT_RTOL = 1e-10
# exp() underflows below this beta_mu
_BETA_MU_FLOOR = -700.0
_POLISH_STEPS = 3


def solve_chemical_potential(geom, lam, rho, rtol=DEFAULT_RTOL, settings=None):
    """Unique beta_mu < 0 with rho_L(beta_mu) = rho.

    The root is bracketed between the value where the zero mode alone
    holds rho and a lower bound found by doubling. Brent's method runs on
    log(-beta_mu), then a few guarded Newton steps use the analytic
    derivative.

    :return: ``ThermoPoint``
    """
    lam = float(lam)
    rho = float(rho)
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError("rho must be > 0, got %r" % rho)
    if not (math.isfinite(lam) and lam > 0.0):
        raise DomainError("lambda must be > 0, got %r" % lam)
    return _solve(geom, lam, rho, float(rtol), settings)


@functools.lru_cache(maxsize=1024)
def _solve(geom, lam, rho, rtol, settings):
    plan = get_plan(geom, lam, settings)
    V = geom.V
    evaluations = [0]

    def residual(beta_mu):
        evaluations[0] += 1
        return plan.density(beta_mu).value - rho

    # the zero mode alone holds rho at beta_mu = -log(1 + 1/(V rho))
    upper = -math.log1p(1.0 / (V * rho))
    lower = min(-1.0, 2.0 * upper)
    while residual(lower) > 0.0:
        if lower <= _BETA_MU_FLOOR:
            raise ConvergenceError(
                "Could not bracket the chemical potential",
                diagnostics={"V": V, "rho": rho, "lower": lower},
            )
        lower = max(2.0 * lower, _BETA_MU_FLOOR)
    if residual(upper) <= 0.0:
        beta_mu = upper
    else:
        t_root = optimize.brentq(
            lambda t: residual(-math.exp(t)),
            math.log(-upper),
            math.log(-lower),
            xtol=1e-15,
            rtol=8.9e-16,
            maxiter=300,
        )
        beta_mu = -math.exp(t_root)
    value = residual(beta_mu)
    for _step in range(_POLISH_STEPS):
        if abs(value) <= rtol * rho * 1e-3:
            break
        slope = plan.density_derivative(beta_mu)
        candidate = beta_mu - value / slope
        if not (lower <= candidate <= upper):
            break
        cand_value = residual(candidate)
        if abs(cand_value) >= abs(value):
            break
        beta_mu, value = candidate, cand_value
    if abs(value) > rtol * rho:
        raise ConvergenceError(
            "Chemical potential did not reach the density tolerance",
            diagnostics={
                "V": V,
                "rho": rho,
                "beta_mu": beta_mu,
                "residual": value,
                "evaluations": evaluations[0],
            },
        )
    _logger.debug(
        "beta_mu=%.17g at V=%g rho=%g after %d evaluations",
        beta_mu,
        V,
        rho,
        evaluations[0],
    )
    return ThermoPoint(lam=lam, rho=rho, beta_mu=beta_mu, V=V)
