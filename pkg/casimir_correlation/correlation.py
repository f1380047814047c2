# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Two-point correlation sigma_L(X) of one box.

With periodic boundary conditions the modes pair as +k and -k, so
sigma_L is the cosine sum (1/V) sum_k cos(k.X) / (e^{beta eps_k - beta mu} - 1)
and never carries an imaginary part.
"""
import logging

import numpy as np

from casimir_box import bulk_correlation, get_plan
from casimir_box.spectrum import iter_mode_slabs
from casimir_condensate import Regime, RegimeWork, find_component
from casimir_numerics import SeriesResult
from casimir_numerics.exceptions import DomainError

from .models.correlation_profile import CorrelationProfile

_logger = logging.getLogger(__name__)


def _separation(X):
    X = np.asarray(X, dtype=float)
    if X.shape != (3,) or not np.all(np.isfinite(X)):
        raise DomainError("separation must be three finite numbers, got %r" % (X,))
    return X


def correlation_theta(tp, geom, X, settings=None):
    """sigma_L(X) from the cycle expansion.

    (1/V) sum_j e^{j beta mu} prod_nu theta_3(pi X_nu / L_nu, e^{-j pi lam^2 / L_nu^2})

    :return: ``SeriesResult``
    """
    tp.check_geometry(geom)
    return get_plan(geom, tp.lam, settings).correlation(tp.beta_mu, _separation(X))


def correlation_direct(tp, geom, X, n_max=None):
    """sigma_L(X) as the plain cosine mode sum over a truncation box."""
    X = _separation(X)
    slabs = iter_mode_slabs(tp, geom, n_max, X=X)
    sizes, bound = next(slabs)
    total = 0.0
    for _n1, _n2, _n3, dens in slabs:
        total += float(dens.sum())
    return SeriesResult(total, bound, int(np.prod(2 * sizes + 1)))


def correlation_profile(tp, geom, separations, settings=None):
    """``CorrelationProfile`` at every separation of ``separations``."""
    tp.check_geometry(geom)
    plan = get_plan(geom, tp.lam, settings)
    points = np.array([_separation(X) for X in separations], dtype=float).reshape(-1, 3)
    results = [plan.correlation(tp.beta_mu, X) for X in points]
    return CorrelationProfile(
        V=geom.V,
        beta_mu=tp.beta_mu,
        separations=points,
        values=np.array([r.value for r in results]),
        bounds=np.array([r.tail_bound for r in results]),
        density=plan.density(tp.beta_mu).value,
    )


def condensate_correlation(tp, geom, X, settings=None):
    """sigma_L(X) minus the bulk correlation at |X|.

    The difference is the sum of the periodic images of the bulk
    correlation, which carries the condensate.
    """
    X = _separation(X)
    sigma = correlation_theta(tp, geom, X, settings).value
    return sigma - bulk_correlation(tp.beta_mu, tp.lam, float(np.linalg.norm(X))).value


def limiting_profile(regime, constants, y, alpha1=None):
    """Limit of sigma along the first axis at y times the coherence scale.

    TYPE_I: rho0. TYPE_II: sum_n cos(2 pi n y) / (pi lam^2 n^2 + B).
    TYPE_III: rho0 e^{-2 y sqrt(pi C) / lam}.
    """
    regime = Regime(regime)
    work = RegimeWork(
        regime=regime,
        lam=constants.lam,
        rho0=constants.rho0,
        alpha1=alpha1,
        constants=constants,
    )
    return find_component("correlation.profile", work).value(y)
