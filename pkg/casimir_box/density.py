# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from .lattice_plan import get_plan


def total_density_cycles(tp, geom, settings=None):
    """rho_L from the cycle expansion sum_j z^j prod_nu theta_3 / V."""
    tp.check_geometry(geom)
    return get_plan(geom, tp.lam, settings).density(tp.beta_mu)


def density_derivative(tp, geom, settings=None):
    tp.check_geometry(geom)
    return get_plan(geom, tp.lam, settings).density_derivative(tp.beta_mu)


def pressure(tp, geom, settings=None):
    """Dimensionless pressure beta p of the box.

    :return: ``SeriesResult``
    """
    tp.check_geometry(geom)
    return get_plan(geom, tp.lam, settings).pressure(tp.beta_mu)
