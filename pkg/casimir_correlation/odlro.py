# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Off-diagonal long-range order along volume-dependent separations."""
import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from joblib import Parallel, delayed
from scipy import optimize

from casimir_box import (
    bulk_chemical_potential,
    bulk_correlation,
    solve_chemical_potential,
)
from casimir_condensate import (
    Regime,
    critical_density,
    find_component,
    regime_for_alpha,
)
from casimir_condensate.critical import regime_work
from casimir_numerics.exceptions import DomainError
from casimir_scaling import ScalingSettings, loglog_slope, run_sweep
from casimir_scaling.sweep import resolve_n_jobs

from .correlation import condensate_correlation, correlation_theta
from .models.coherence_report import AxisCoherence, CoherenceKind, CoherenceReport
from .models.separation_path import SeparationPath

_logger = logging.getLogger(__name__)


def _diverges(path):
    return any(x > 0 and s > 0 for x, s in zip(path.coefficients, path.exponents))


def path_limit(geom, lam, rho, path):
    """Thermodynamic limit of sigma_L(X(V)) along ``path``.

    Diverging paths only keep the condensate part; fixed separations keep
    the bulk correlation on top of it.
    """
    rho_c = critical_density(lam)
    if not _diverges(path):
        beta_mu = bulk_chemical_potential(lam, rho) if rho < rho_c else 0.0
        r = float(np.linalg.norm(path.coefficients))
        bulk = bulk_correlation(beta_mu, lam, r).value
        return bulk + max(rho - rho_c, 0.0)
    if rho <= rho_c:
        return 0.0
    work = regime_work(geom, lam, rho)
    return find_component("correlation.profile", work).path_limit(path)


def odlro_profile(geom, lam, rho, path, volumes, settings=None, n_jobs=None):
    """Sweep of sigma_L(X(V)) along a ``SeparationPath``.

    The path is checked against the half-period of every sampled box
    first; a violation raises ``PathViolationError``.
    """
    path.validate(geom, volumes)

    def observable(volume):
        box = geom.at_volume(volume)
        tp = solve_chemical_potential(box, lam, rho)
        return correlation_theta(tp, box, path.at(volume)).value

    return run_sweep(
        observable,
        volumes,
        settings=settings,
        n_jobs=n_jobs,
        label="sigma%s" % path.label(),
        annotations={"analytic_limit": path_limit(geom, lam, rho, path)},
    )


def _default_scaling():
    return ScalingSettings(rel_tol=2e-2)


@dataclass(frozen=True)
class CoherenceSettings:
    """Knobs of ``coherence_length``.

    An axis is macroscopic when sigma at half its side extrapolates above
    ``macroscopic_tol * rho0``. Otherwise the coherence length xi(V), where
    the condensate correlation drops by 1/e, is measured and its log-log
    slope over the ``slope_points`` largest volumes is the exponent.
    """

    macroscopic_tol: float = 0.01
    slope_points: int = 5
    sample_fractions: Tuple[float, ...] = tuple(k / 10.0 for k in range(1, 11))
    scaling: ScalingSettings = field(default_factory=_default_scaling)


def coherence_point(geom, lam, rho, volume, axis):
    """xi(V) along ``axis``; None if the correlation never drops by 1/e."""
    box = geom.at_volume(volume)
    tp = solve_chemical_potential(box, lam, rho)
    half = box.side_lengths[axis] / 2.0
    unit = np.zeros(3)
    unit[axis] = 1.0
    target = condensate_correlation(tp, box, unit * 0.0) / math.e

    def excess(t):
        return condensate_correlation(tp, box, unit * t) - target

    if excess(half) >= 0.0:
        return None
    return optimize.brentq(excess, 0.0, half, xtol=1e-12 * half, rtol=1e-12)


def _expected_exponents(geom):
    expected = list(geom.alpha)
    if regime_for_alpha(geom.alpha1) is Regime.TYPE_III:
        expected[0] = 1.0 - geom.alpha1
    return expected


def _sample_axis(geom, lam, rho, volume, axis, fractions, rho0):
    """Condensate correlation at X = V^{f alpha_nu} (capped at L/2), over rho0."""
    box = geom.at_volume(volume)
    tp = solve_chemical_potential(box, lam, rho)
    alpha = geom.alpha[axis]
    half = box.side_lengths[axis] / 2.0
    samples = {}
    for f in fractions:
        X = np.zeros(3)
        X[axis] = min(volume ** (f * alpha), half)
        samples["%.6g" % (f * alpha)] = condensate_correlation(tp, box, X) / rho0
    return samples


def _axis_coherence(geom, lam, rho, volumes, axis, expected, settings, n_jobs):
    rho0 = rho - critical_density(lam)
    alpha = geom.alpha[axis]
    half = odlro_profile(
        geom,
        lam,
        rho,
        SeparationPath.along(axis, 0.5, alpha),
        volumes,
        settings=settings.scaling,
        n_jobs=n_jobs,
    )
    limit = half.extrapolated_limit
    evidence = {"half_period": half.fit_metadata()}

    def result(kind, exponent, reason=""):
        _logger.info(
            "coherence axis %d alpha=%s: %s exponent=%s %s",
            axis + 1,
            geom.alpha,
            kind.value,
            exponent,
            reason,
        )
        return AxisCoherence(
            axis=axis,
            kind=kind,
            exponent=exponent,
            expected=expected,
            half_period_limit=limit,
            evidence=evidence,
            reason=reason,
        )

    threshold = settings.macroscopic_tol * rho0
    # correlations decaying faster than any power never fit L + c V^-p
    vanished = max(abs(v) for v in half.values[-3:]) < threshold
    if half.converged and limit > threshold:
        return result(CoherenceKind.MACROSCOPIC, alpha)
    if not (vanished or half.converged):
        return result(
            CoherenceKind.INCONCLUSIVE,
            math.nan,
            "half-period correlation did not converge (residual %.3g)" % half.residual,
        )

    jobs = resolve_n_jobs(n_jobs, len(volumes))
    lengths = Parallel(n_jobs=jobs, prefer="threads")(
        delayed(coherence_point)(geom, lam, rho, v, axis) for v in volumes
    )
    evidence["coherence_lengths"] = lengths
    evidence["samples"] = _sample_axis(
        geom, lam, rho, volumes[-1], axis, settings.sample_fractions, rho0
    )
    if any(xi is None for xi in lengths):
        return result(
            CoherenceKind.INCONCLUSIVE,
            math.nan,
            "condensate correlation keeps 1/e of its value over the half-period",
        )
    slope, rms = loglog_slope(volumes, lengths, last=settings.slope_points)
    evidence["slope_rms"] = rms
    return result(CoherenceKind.MICROSCOPIC, slope)


def coherence_length(geom, lam, rho, volumes, settings=None, n_jobs=None):
    """Macroscopic or microscopic off-diagonal order along each axis.

    An axis is macroscopic when the correlation at half its side survives
    the thermodynamic limit. Otherwise the growth exponent s* of the
    coherence length is fitted; for alpha1 > 1/2 the first axis has
    s* = 1 - alpha1.
    """
    settings = settings or CoherenceSettings()
    if not rho > critical_density(lam):
        raise DomainError("rho=%r is not above rho_c; there is no condensate" % rho)
    volumes = tuple(float(v) for v in volumes)
    if len(volumes) < settings.slope_points:
        raise DomainError(
            "coherence_length needs at least %d volumes, got %d"
            % (settings.slope_points, len(volumes))
        )
    expected = _expected_exponents(geom)
    return CoherenceReport(
        axes=tuple(
            _axis_coherence(
                geom, lam, rho, volumes, axis, expected[axis], settings, n_jobs
            )
            for axis in range(3)
        )
    )
