# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import logging
import math

from casimir_numerics import polylog
from casimir_numerics.exceptions import DomainError

from .components.base import RegimeWork, find_component
from .models.regime import Regime

_logger = logging.getLogger(__name__)

# alpha1 within this distance of 1/2 is the TypeII boundary
ALPHA_TOL = 1e-12


def critical_density(lam):
    """rho_c = zeta(3/2) / lambda^3."""
    lam = float(lam)
    if not (math.isfinite(lam) and lam > 0.0):
        raise DomainError("lambda must be > 0, got %r" % lam)
    return polylog(1.5, 1.0).value / lam**3


def density_from_offset(lam, offset):
    """Total density rho_c + offset."""
    return critical_density(lam) + float(offset)


def regime_for_alpha(alpha1, tol=ALPHA_TOL):
    """Condensation type of a box with largest exponent alpha1."""
    if alpha1 < 0.5 - tol:
        return Regime.TYPE_I
    if alpha1 <= 0.5 + tol:
        return Regime.TYPE_II
    return Regime.TYPE_III


def solve_constant(regime, lam, rho_minus_rhoc, alpha1=None):
    """Constant A, B or C of the condensation type.

    :param regime: ``Regime``
    :param lam: thermal wavelength
    :param rho_minus_rhoc: condensate density rho0 > 0
    :param alpha1: largest box exponent, sets delta for TYPE_III
    :return: ``CondensateConstants``
    """
    if not rho_minus_rhoc > 0:
        raise DomainError("rho - rho_c must be > 0, got %r" % rho_minus_rhoc)
    if not lam > 0:
        raise DomainError("lambda must be > 0, got %r" % lam)
    regime = Regime(regime)
    work = RegimeWork(
        regime=regime, lam=float(lam), rho0=float(rho_minus_rhoc), alpha1=alpha1
    )
    constants = find_component("condensate.constants", work).solve()
    _logger.debug(
        "%s constant %.17g for rho0=%g", regime.value, constants.constant, work.rho0
    )
    return constants


def regime_work(geom, lam, rho):
    """Work context of a box at density rho > rho_c, with its constants."""
    rho0 = rho - critical_density(lam)
    if not rho0 > 0:
        raise DomainError("rho=%r is not above rho_c; there is no condensate" % rho)
    regime = regime_for_alpha(geom.alpha1)
    constants = solve_constant(regime, lam, rho0, alpha1=geom.alpha1)
    return RegimeWork(
        regime=regime, lam=lam, rho0=rho0, alpha1=geom.alpha1, constants=constants
    )
