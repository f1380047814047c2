# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import logging
import math
import os

from joblib import Parallel, delayed

from casimir_numerics.exceptions import DomainError, SweepError

from .fitting import fit_power_law, is_converged
from .models.scaling_series import ScalingSeries, ScalingSettings

_logger = logging.getLogger(__name__)

THREADS_ENV = "CASIMIR_THREADS"


def volume_sequence(v0=1e3, k_max=10, ratio=2.0):
    """Volumes ``v0 * ratio**k`` for ``k = 0 .. k_max``."""
    if v0 <= 0 or ratio <= 1:
        raise DomainError("Need v0 > 0 and ratio > 1")
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    return tuple(float(v0) * ratio**k for k in range(int(k_max) + 1))


def _thread_cap():
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return None
    try:
        cap = int(raw)
    except ValueError:
        _logger.warning("Ignoring %s=%r, not an integer", THREADS_ENV, raw)
        return None
    return max(cap, 1)


def resolve_n_jobs(n_jobs, count):
    n = n_jobs or os.cpu_count() or 1
    cap = _thread_cap()
    if cap:
        n = min(n, cap)
    return max(1, min(n, count))


def _evaluate(observable, volume):
    try:
        return volume, float(observable(volume)), None
    except Exception as err:
        return volume, math.nan, err


def build_series(volumes, values, settings=None, label="", annotations=None):
    """Extrapolate samples into a ``ScalingSeries``."""
    settings = settings or ScalingSettings()
    fit = fit_power_law(volumes, values, settings)
    return ScalingSeries(
        volumes=tuple(float(v) for v in volumes),
        values=tuple(float(v) for v in values),
        extrapolated_limit=fit.limit,
        fit_exponent=fit.exponent,
        amplitude=fit.amplitude,
        residual=fit.residual,
        converged=is_converged(values, fit, settings),
        label=label,
        annotations=dict(annotations or {}),
    )


def run_sweep(
    observable, volumes, settings=None, n_jobs=None, label="", annotations=None
):
    """Evaluate ``observable(V)`` over increasing volumes and extrapolate.

    Volumes run on a thread pool capped by ``CASIMIR_THREADS``; results
    keep the volume order. The first failing volume aborts the sweep with
    a ``SweepError`` that carries the samples computed so far.
    """
    volumes = tuple(float(v) for v in volumes)
    if not volumes:
        raise DomainError("Empty volume sequence")
    if any(b <= a for a, b in zip(volumes, volumes[1:])):
        raise DomainError("volumes must be strictly increasing")
    jobs = resolve_n_jobs(n_jobs, len(volumes))
    _logger.debug("Sweep %s over %d volumes on %d threads", label, len(volumes), jobs)
    results = Parallel(n_jobs=jobs, prefer="threads")(
        delayed(_evaluate)(observable, v) for v in volumes
    )
    partial = []
    for volume, value, err in results:
        if err is not None:
            raise SweepError(
                "Sweep %s failed at V=%g: %s" % (label or "", volume, err),
                volume=volume,
                partial=partial,
            ) from err
        partial.append((volume, value))
    series = build_series(
        volumes,
        [v for _, v in partial],
        settings=settings,
        label=label,
        annotations=annotations,
    )
    _logger.info(
        "Sweep %s: limit=%.12g exponent=%.6g converged=%s",
        label,
        series.extrapolated_limit,
        series.fit_exponent,
        series.converged,
    )
    return series
