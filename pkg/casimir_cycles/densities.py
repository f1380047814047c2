# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Short, long and windowed cycle densities along volume sweeps."""
import logging
import math

from casimir_box import (
    bulk_chemical_potential,
    bulk_density,
    get_plan,
    solve_chemical_potential,
)
from casimir_condensate import critical_density, find_component
from casimir_condensate.critical import regime_work
from casimir_numerics.exceptions import DomainError, EmptyWindowError
from casimir_scaling import run_sweep

from .models.cycle_window import CycleWindow

_logger = logging.getLogger(__name__)


def _state(geom, lam, rho, volume):
    box = geom.at_volume(volume)
    tp = solve_chemical_potential(box, lam, rho)
    return box, tp, get_plan(box, lam)


def short_cycle_density(geom, lam, rho, volumes, M, settings=None, n_jobs=None):
    """Sweep of sum_{j=1}^{M} rho_{L,j}.

    The M -> oo limit taken after V -> oo, g_{3/2}(e^{beta mu_oo}) / lambda^3,
    is attached as the ``short_limit`` annotation: rho below rho_c and rho_c
    above it.
    """
    M = int(M)
    if M < 1:
        raise DomainError("M must be >= 1, got %r" % M)
    rho_c = critical_density(lam)
    if rho < rho_c:
        short_limit = bulk_density(bulk_chemical_potential(lam, rho), lam).value
    else:
        short_limit = rho_c

    def observable(volume):
        _box, tp, plan = _state(geom, lam, rho, volume)
        return plan.cycle_window(tp.beta_mu, 1, M).value

    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="short_cycles[M=%d]" % M,
        annotations={"M": M, "short_limit": short_limit},
    )


def long_cycle_density(geom, lam, rho, volumes, settings=None, n_jobs=None):
    """Sweep of rho - g_{3/2}(e^{beta mu_L}) / lambda^3.

    Every fixed cycle length converges to its bulk value, so the density
    left once all short cycles are removed is the box density minus the
    bulk density at the solved chemical potential.
    """
    if not rho > 0:
        raise DomainError("rho must be > 0, got %r" % rho)

    def observable(volume):
        _box, tp, _plan = _state(geom, lam, rho, volume)
        return rho - bulk_density(tp.beta_mu, lam).value

    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="long_cycles",
        annotations={"analytic_limit": max(0.0, rho - critical_density(lam))},
    )


def window_limit(geom, lam, rho, window):
    """Thermodynamic limit of the density in ``window``, None if unknown."""
    if rho <= critical_density(lam):
        return 0.0
    work = regime_work(geom, lam, rho)
    return find_component("cycles.window_law", work).window_limit(window)


def windowed_cycle_density(geom, lam, rho, window, volumes, settings=None, n_jobs=None):
    """Sweep of sum_{j in window(V)} rho_{L,j}.

    The endpoints are rounded outward. Open windows sum the tail in
    closed form, so no window is too long to evaluate; a window lying
    below j = 1 raises ``EmptyWindowError``.
    """
    for volume in volumes:
        if window.scale_at(volume) * window.y < 1.0:
            raise EmptyWindowError(
                "%s holds no cycle length at V=%g" % (window.label(), volume)
            )

    def observable(volume):
        _box, tp, plan = _state(geom, lam, rho, volume)
        first, last = window.bounds(volume)
        return plan.cycle_window(tp.beta_mu, first, last).value

    annotations = {"x": window.x, "y": window.y}
    if window.is_power:
        annotations.update(exponent=window.exponent, coefficient=window.coefficient)
    limit = window_limit(geom, lam, rho, window)
    if limit is not None:
        annotations["analytic_limit"] = limit
    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="cycles[%s]" % window.label(),
        annotations=annotations,
    )


def scaled_long_cycle_density(
    geom, lam, rho, exponent, volumes, coefficient=1.0, settings=None, n_jobs=None
):
    """Sweep of sum_{j >= coefficient V^exponent} rho_{L,j}."""
    window = CycleWindow(1.0, math.inf, exponent=exponent, coefficient=coefficient)
    return windowed_cycle_density(
        geom, lam, rho, window, volumes, settings=settings, n_jobs=n_jobs
    )
