# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from casimir_scaling import run_sweep

from .solver import solve_chemical_potential


def chemical_potential_series(
    geom, lam, rho, volumes, exponent=0.0, settings=None, n_jobs=None
):
    """Sweep of -beta_mu(V) * V^exponent.

    With ``exponent = 0`` the series extrapolates to -beta_mu in the
    thermodynamic limit. A positive exponent measures the rate at which
    beta_mu reaches zero.
    """

    def observable(volume):
        tp = solve_chemical_potential(geom.at_volume(volume), lam, rho)
        return -tp.beta_mu * volume**exponent

    label = "-beta_mu" if not exponent else "-beta_mu*V^%g" % exponent
    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label=label,
        annotations={"exponent": exponent},
    )
