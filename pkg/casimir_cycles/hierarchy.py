# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Length scale of the cycles that carry the condensate."""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from joblib import Parallel, delayed

from casimir_box import (
    bulk_cycle_window,
    bulk_density,
    get_plan,
    solve_chemical_potential,
)
from casimir_condensate import critical_density, regime_for_alpha
from casimir_numerics.exceptions import DomainError
from casimir_scaling import loglog_slope
from casimir_scaling.sweep import resolve_n_jobs

from .models.hierarchy_report import HierarchyKind, HierarchyReport

_logger = logging.getLogger(__name__)

_MAX_LENGTH = 2**62


@dataclass(frozen=True)
class HierarchySettings:
    """Knobs of ``hierarchy_detect``.

    :param quantile: share of the condensate cycles below the measured length
    :param slope_points: largest volumes entering the log-log slope
    :param grid: candidate exponents; 2 (1 - alpha1) is added for alpha1 > 1/2
    :param snap_tol: largest distance between slope and accepted candidate
    :param capture_low: lower end of the confirming window, times V^delta
    :param capture_high: upper end of the confirming window, times V^delta
    :param capture_tol: condensate share the confirming window may miss
    :param scan_width: half width (as a factor) of the evidence windows
    """

    quantile: float = 0.75
    slope_points: int = 5
    grid: Tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
    snap_tol: float = 0.06
    capture_low: float = 1e-4
    capture_high: float = 1e4
    capture_tol: float = 0.05
    scan_width: float = 10.0

    def __post_init__(self):
        if not 0 < self.quantile < 1:
            raise DomainError("quantile must lie in (0, 1), got %r" % self.quantile)
        if self.slope_points < 2:
            raise DomainError("slope_points must be >= 2")


def _condensate_window(plan, beta_mu, lam, first, last):
    """Density of the window minus its bulk part, both with j in [first, last]."""
    first = max(int(first), 1)
    box = plan.cycle_window(beta_mu, first, last).value
    return box - bulk_cycle_window(beta_mu, lam, first, last)


def condensate_cycle_quantile(tp, geom, quantile=0.75, settings=None):
    """Smallest length j holding ``quantile`` of the condensate cycles.

    Condensate cycles are c_j = rho_{L,j} - e^{j beta mu} / (lambda^3 j^{3/2}),
    which is non-negative since the box trace dominates its bulk value.

    :return: (length, total condensate cycle density)
    """
    tp.check_geometry(geom)
    plan = get_plan(geom, tp.lam, settings)
    beta_mu, lam = tp.beta_mu, tp.lam
    total = plan.density(beta_mu).value - bulk_density(beta_mu, lam).value
    if total <= 0:
        return 1, total
    target = quantile * total

    def mass(last):
        return _condensate_window(plan, beta_mu, lam, 1, last)

    lo, hi = 0, 1
    while mass(hi) < target:
        lo, hi = hi, 2 * hi
        if hi > _MAX_LENGTH:
            raise DomainError(
                "Condensate cycles exceed length %d at V=%g" % (_MAX_LENGTH, geom.V)
            )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mass(mid) >= target:
            hi = mid
        else:
            lo = mid
    return hi, total


def _candidates(settings, alpha1):
    grid = set(settings.grid)
    if alpha1 > 0.5:
        grid.add(2.0 * (1.0 - alpha1))
    return sorted(grid)


def hierarchy_detect(geom, lam, rho, volumes, settings=None, n_jobs=None):
    """Macroscopic or long-microscopic cycles, from the growth of their length.

    The ``quantile`` length of the condensate cycles is measured on every
    volume; its log-log slope over the largest volumes is snapped to the
    candidate grid and the exponent found is confirmed by a wide window
    [capture_low V^delta, capture_high V^delta] holding the condensate.
    alpha1 only enters through the extra candidate 2 (1 - alpha1).
    """
    settings = settings or HierarchySettings()
    rho0 = rho - critical_density(lam)
    if not rho0 > 0:
        raise DomainError("rho=%r is not above rho_c; there is no condensate" % rho)
    volumes = tuple(float(v) for v in volumes)
    if len(volumes) < settings.slope_points:
        raise DomainError(
            "hierarchy_detect needs at least %d volumes, got %d"
            % (settings.slope_points, len(volumes))
        )
    expected = regime_for_alpha(geom.alpha1).natural_exponent(geom.alpha1)

    def measure(volume):
        box = geom.at_volume(volume)
        tp = solve_chemical_potential(box, lam, rho)
        return condensate_cycle_quantile(tp, box, settings.quantile)

    jobs = resolve_n_jobs(n_jobs, len(volumes))
    measured = Parallel(n_jobs=jobs, prefer="threads")(
        delayed(measure)(v) for v in volumes
    )
    lengths = [length for length, _total in measured]
    slope, rms = loglog_slope(volumes, lengths, last=settings.slope_points)
    grid = _candidates(settings, geom.alpha1)
    nearest = min(grid, key=lambda g: abs(g - slope))
    evidence = {
        "volumes": list(volumes),
        "quantile_lengths": lengths,
        "condensate_cycles": [total for _length, total in measured],
        "slope_rms": rms,
        "grid": grid,
    }

    def report(kind, exponent, capture, reason=""):
        _logger.info(
            "hierarchy alpha=%s: %s delta=%s slope=%.4g %s",
            geom.alpha,
            kind.value,
            exponent,
            slope,
            reason,
        )
        return HierarchyReport(
            kind=kind,
            exponent=exponent,
            expected=expected,
            slope=slope,
            capture=capture,
            evidence=evidence,
            reason=reason,
        )

    box = geom.at_volume(volumes[-1])
    tp = solve_chemical_potential(box, lam, rho)
    plan = get_plan(box, lam)
    scan = {}
    for delta in grid:
        s = box.V**delta
        first = math.floor(s / settings.scan_width)
        last = math.ceil(s * settings.scan_width)
        scan["%.6g" % delta] = (
            _condensate_window(plan, tp.beta_mu, lam, first, last) / rho0
        )
    evidence["window_scan"] = scan

    if abs(nearest - slope) > settings.snap_tol:
        return report(
            HierarchyKind.INCONCLUSIVE,
            math.nan,
            math.nan,
            "slope %.4g is off every candidate exponent" % slope,
        )
    s = box.V**nearest
    capture = (
        _condensate_window(
            plan,
            tp.beta_mu,
            lam,
            math.floor(settings.capture_low * s),
            math.ceil(settings.capture_high * s),
        )
        / rho0
    )
    if capture < 1.0 - settings.capture_tol:
        return report(
            HierarchyKind.INCONCLUSIVE,
            nearest,
            capture,
            "window at V^%.4g holds only %.3g of the condensate" % (nearest, capture),
        )
    if abs(nearest - 1.0) < 1e-9:
        kind = HierarchyKind.MACROSCOPIC
    else:
        kind = HierarchyKind.LONG_MICROSCOPIC
    return report(kind, nearest, capture)
