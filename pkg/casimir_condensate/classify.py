# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Condensation type from finite-size evidence."""
import logging
from dataclasses import dataclass, field
from typing import Tuple

from casimir_scaling import ScalingSettings

from .components.base import RegimeWork, find_component
from .critical import (
    critical_density,
    regime_for_alpha,
    regime_work,
    solve_constant,
)
from .models.regime import Regime, Verdict
from .models.reports import ClassificationReport
from .models.scale_function import ScaleFunction
from .scaled import scaled_condensate_density, zero_mode_fraction_series

_logger = logging.getLogger(__name__)


def _default_scaling():
    return ScalingSettings(rel_tol=2e-2)


@dataclass(frozen=True)
class ClassifySettings:
    """Decision rule of ``classify``.

    The extrapolated zero-mode fraction is matched to the prediction of
    each regime. The closest one wins if it is within ``fraction_tol``
    and beats the runner-up by ``separation``.
    """

    deltas: Tuple[float, ...] = (-0.1, 0.0, 0.1)
    fraction_tol: float = 0.1
    separation: float = 0.1
    agreement_tol: float = 0.1
    scaling: ScalingSettings = field(default_factory=_default_scaling)


def _predictions(lam, rho0, alpha1):
    res = {}
    for regime in Regime:
        constants = solve_constant(regime, lam, rho0, alpha1=alpha1)
        work = RegimeWork(regime, lam, rho0, alpha1, constants)
        profile = find_component("condensate.profile", work)
        res[regime.value] = profile.zero_mode_fraction()
    return res


def classify(geom, lam, rho, volumes, settings=None, n_jobs=None):
    """Decide TYPE_I / TYPE_II / TYPE_III from sweeps, not from alpha1.

    The alpha1 rule is only reported as ``expected`` and used to check
    the eta_delta scan against its analytic limits.
    """
    settings = settings or ClassifySettings()
    rho_c = critical_density(lam)
    rho0 = rho - rho_c
    if rho0 <= 0:
        _logger.info("rho=%g <= rho_c=%g: no condensate", rho, rho_c)
        return ClassificationReport(
            verdict=Verdict.NO_CONDENSATE,
            expected=None,
            rho0=rho0,
            zero_mode_fraction=0.0,
            reason="rho <= rho_c",
        )
    expected = regime_for_alpha(geom.alpha1)
    predictions = _predictions(lam, rho0, geom.alpha1)
    zero = zero_mode_fraction_series(
        geom, lam, rho, volumes, settings=settings.scaling, n_jobs=n_jobs
    )
    evidence = {"zero_mode_fraction": zero}
    agreement = {}
    work = regime_work(geom, lam, rho)
    for delta in settings.deltas:
        key = "eta_delta=%+g" % delta
        series = scaled_condensate_density(
            geom,
            lam,
            rho,
            ScaleFunction.threshold(delta),
            volumes,
            settings=settings.scaling,
            n_jobs=n_jobs,
        )
        evidence[key] = series
        analytic = series.annotations["analytic_limit"]
        gap = abs(series.extrapolated_limit - analytic)
        agreement[key] = bool(
            series.converged and gap <= settings.agreement_tol * work.rho0
        )

    measured = zero.extrapolated_limit

    def report(verdict, reason=""):
        _logger.info("classify alpha=%s: %s %s", geom.alpha, verdict.value, reason)
        return ClassificationReport(
            verdict=verdict,
            expected=expected,
            rho0=rho0,
            zero_mode_fraction=measured,
            predictions=predictions,
            evidence=evidence,
            agreement=agreement,
            reason=reason,
        )

    if not zero.converged:
        return report(
            Verdict.INCONCLUSIVE,
            "zero-mode fraction did not converge (residual %.3g)" % zero.residual,
        )
    ranked = sorted(predictions.items(), key=lambda item: abs(item[1] - measured))
    (best, best_value), (runner, runner_value) = ranked[0], ranked[1]
    gap = abs(best_value - measured)
    if gap > settings.fraction_tol:
        return report(
            Verdict.INCONCLUSIVE,
            "zero-mode fraction %.4g matches no regime (closest %s at %.4g)"
            % (measured, best, best_value),
        )
    if abs(runner_value - measured) - gap < settings.separation:
        return report(
            Verdict.INCONCLUSIVE,
            "zero-mode fraction %.4g cannot separate %s from %s"
            % (measured, best, runner),
        )
    return report(Verdict(best))
