# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Condensate density in shrinking momentum windows |k| <= eta(V)."""
import math

import numpy as np

from casimir_box import modes_below, solve_chemical_potential
from casimir_scaling import run_sweep

from .components.base import RegimeWork, find_component
from .critical import critical_density, regime_work
from .models.regime import Regime

# keeps modes sitting exactly on the cut inside the window
_CUT_SLACK = 1e-12


def window_density(tp, geom, eta, mode_limit=5_000_000):
    """Density in the modes with |k| <= eta(V) at one thermo point."""
    e_max = eta.max_energy(geom.V, tp.lam) * (1.0 + _CUT_SLACK)
    _indices, energies = modes_below(geom, tp.lam, e_max, limit=mode_limit)
    return float((1.0 / np.expm1(energies - tp.beta_mu)).sum()) / geom.V


def _profile(constants, alpha1=None, regime=None):
    work = RegimeWork(
        regime=Regime(regime) if regime is not None else constants.regime,
        lam=constants.lam,
        rho0=constants.rho0,
        alpha1=alpha1,
        constants=constants,
    )
    return find_component("condensate.profile", work)


def scaled_condensate_limit(constants, eta, alpha1=None):
    """Thermodynamic limit of the density in |k| <= eta(V)."""
    return _profile(constants, alpha1).scaled_limit(eta)


def limiting_occupation_profile(regime, constants, n1):
    """lim rho_L(k) for the mode k = (2 pi n1 / L1, 0, 0).

    rho0 in the zero mode for TYPE_I, 1 / (B + pi lam^2 n1^2) for TYPE_II
    and 0 for every mode of TYPE_III.
    """
    return _profile(constants, regime=regime).mode_limit(int(n1))


def scaled_condensate_density(
    geom, lam, rho, eta, volumes, settings=None, n_jobs=None
):
    """Sweep of rho_eta(V), the density in modes with |k| <= eta(V).

    Above the critical density the analytic limit is attached as the
    ``analytic_limit`` annotation.
    """

    def observable(volume):
        box = geom.at_volume(volume)
        tp = solve_chemical_potential(box, lam, rho)
        return window_density(tp, box, eta)

    annotations = {"coefficient": eta.coefficient, "exponent": eta.exponent}
    if rho > critical_density(lam):
        work = regime_work(geom, lam, rho)
        annotations["analytic_limit"] = scaled_condensate_limit(
            work.constants, eta, alpha1=geom.alpha1
        )
        annotations["rho0"] = work.rho0
    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="rho_eta[%g*V^-%g]" % (eta.coefficient, eta.exponent),
        annotations=annotations,
    )


def zero_mode_fraction_series(geom, lam, rho, volumes, settings=None, n_jobs=None):
    """Sweep of rho_L(0) / (rho - rho_c)."""
    rho0 = rho - critical_density(lam)

    def observable(volume):
        box = geom.at_volume(volume)
        tp = solve_chemical_potential(box, lam, rho)
        return 1.0 / math.expm1(-tp.beta_mu) / volume / rho0

    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="zero_mode_fraction",
        annotations={"rho0": rho0},
    )
