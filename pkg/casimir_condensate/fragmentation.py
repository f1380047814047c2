# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import logging

import numpy as np

from casimir_box import ModeIndex, modes_below, solve_chemical_potential
from casimir_numerics.exceptions import DomainError

from .critical import critical_density
from .models.reports import FragmentationReport

_logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 1e-3


def fragmentation_report(
    geom,
    lam,
    rho,
    V,
    threshold=DEFAULT_THRESHOLD,
    window_factor=50.0,
    quantile=0.5,
    max_listed=50,
):
    """Modes carrying the condensate at volume V.

    The window holds the modes with beta eps <= window_factor * (-beta_mu);
    their particle numbers n_i = V rho_L(k) add up to ``N0``. ``M`` counts
    the window modes with n_i >= threshold * rho V: 1 for TYPE_I, finite
    for TYPE_II, growing with V for TYPE_III at a fixed threshold, and 0
    when rho <= rho_c.
    """
    if not 0 < threshold < 1:
        raise DomainError("threshold must lie in (0, 1), got %r" % threshold)
    if not 0 < quantile <= 1:
        raise DomainError("quantile must lie in (0, 1], got %r" % quantile)
    box = geom.at_volume(V)
    tp = solve_chemical_potential(box, lam, rho)
    rho0 = rho - critical_density(lam)
    if rho0 <= 0:
        _logger.info("rho=%g <= rho_c: no condensate at V=%g", rho, box.V)
        return FragmentationReport(
            V=box.V, beta_mu=tp.beta_mu, rho0=rho0, N0=0.0, M=0, threshold=threshold
        )
    e_max = window_factor * -tp.beta_mu
    indices, energies = modes_below(box, lam, e_max)
    numbers = 1.0 / np.expm1(energies - tp.beta_mu)
    order = np.argsort(numbers, kind="stable")[::-1]
    numbers = numbers[order]
    indices = indices[order]
    N0 = float(numbers.sum())
    M = int(np.count_nonzero(numbers >= threshold * rho * box.V))
    cumulative = np.cumsum(numbers)
    participation = int(np.searchsorted(cumulative, quantile * N0 * (1 - 1e-12))) + 1
    top = [
        (ModeIndex(*(int(i) for i in idx)), float(n))
        for idx, n in zip(indices[:max_listed], numbers[:max_listed])
    ]
    return FragmentationReport(
        V=box.V,
        beta_mu=tp.beta_mu,
        rho0=rho0,
        N0=N0,
        M=M,
        threshold=threshold,
        occupations=tuple(n for _idx, n in top),
        top_modes=top,
        window_energy=e_max,
        mode_count=len(numbers),
        participation=min(participation, len(numbers)),
        quantile=quantile,
    )
