# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Densities of particles grouped by the length of their permutation cycle."""
import logging
import math
import warnings

import numpy as np

from casimir_box import get_plan, mode_energy_beta
from casimir_numerics.exceptions import CostModelWarning, DomainError

from .models.cycle_spectrum import CycleSpectrum

_logger = logging.getLogger(__name__)

# relative size of the cycle tail left out of an automatic j_max
DEFAULT_TAIL_TOL = 1e-12
# explicit exponentials allowed for one spectrum
DEFAULT_MAX_COST = 50_000_000


def cycle_density(tp, geom, j, settings=None):
    """rho_{L,j} = e^{j beta mu} Tr e^{-j beta T} / V."""
    tp.check_geometry(geom)
    return get_plan(geom, tp.lam, settings).cycle_density(tp.beta_mu, j).value


def _spectrum_cost(plan, j_max):
    """Explicit exponentials needed for cycle lengths 1 .. j_max."""
    beyond = max(j_max - plan.j_split, 0)
    return min(j_max, plan.j_split) + beyond * max(len(plan.energies), 1)


def _affordable(plan, max_cost):
    n_low = max(len(plan.energies), 1)
    if max_cost <= plan.j_split:
        return max(int(max_cost), 1)
    return plan.j_split + (int(max_cost) - plan.j_split) // n_low


def cycle_spectrum(
    tp,
    geom,
    j_max=None,
    tail_tol=DEFAULT_TAIL_TOL,
    max_cost=DEFAULT_MAX_COST,
    settings=None,
):
    """Cycle densities for j = 1 .. j_max and the closed-form tail beyond.

    Without ``j_max`` the spectrum runs until the zero-mode geometric tail
    e^{j beta mu} / (1 - e^{beta mu}) falls below ``tail_tol`` of the
    density, that is O(log(1/tail_tol) / -beta_mu) lengths. Cycle lengths
    beyond the plan split cost one exponential per low-energy mode; a
    request above ``max_cost`` is cut back with a ``CostModelWarning``.
    The tail always closes the partition of the density.
    """
    tp.check_geometry(geom)
    plan = get_plan(geom, tp.lam, settings)
    beta_mu = tp.beta_mu
    if j_max is None:
        density = plan.density(beta_mu).value
        target = tail_tol * density * geom.V * -math.expm1(beta_mu)
        j_max = max(int(math.ceil(math.log(target) / beta_mu)), 1) if target < 1 else 1
    j_max = int(j_max)
    if j_max < 1:
        raise DomainError("j_max must be >= 1, got %r" % j_max)
    cost = _spectrum_cost(plan, j_max)
    if cost > max_cost:
        reduced = _affordable(plan, max_cost)
        message = (
            "Cycle spectrum up to j=%d costs %.3g exponentials at V=%g; cut to j=%d"
            % (j_max, cost, geom.V, reduced)
        )
        _logger.warning(message)
        warnings.warn(message, CostModelWarning, stacklevel=2)
        j_max = reduced
    densities, bound = plan.cycle_densities(beta_mu, j_max)
    tail = plan.cycle_window(beta_mu, j_max + 1)
    _logger.debug("Cycle spectrum V=%g: j_max=%d tail=%.3g", geom.V, j_max, tail.value)
    return CycleSpectrum(
        V=geom.V,
        beta_mu=beta_mu,
        densities=densities,
        tail=tail.value,
        tail_bound=bound + tail.tail_bound,
    )


def mode_cycle_densities(tp, geom, n, j_max):
    """Cycles of lengths 1 .. j_max carried by the single mode n.

    (1/V) e^{j (beta mu - beta eps_k)}; their geometric sum over all j is
    the occupation density of the mode.
    """
    tp.check_geometry(geom)
    if int(j_max) < 1:
        raise DomainError("j_max must be >= 1, got %r" % j_max)
    gap = mode_energy_beta(geom, tp.lam, n) - tp.beta_mu
    j = np.arange(1, int(j_max) + 1, dtype=float)
    return np.exp(-gap * j) / tp.V
