# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Extrapolation of finite-volume samples by L + c V^-p."""
import logging
import math
import warnings

import numpy as np
from scipy import optimize

from casimir_numerics.exceptions import DomainError

from .models.scaling_series import PowerLawFit, ScalingSettings

_logger = logging.getLogger(__name__)

_GRID_SIZE = 600
_GRID_MAX = 6.0


def _as_arrays(volumes, values, min_points):
    volumes = np.asarray(volumes, dtype=float)
    values = np.asarray(values, dtype=float)
    if volumes.shape != values.shape or volumes.ndim != 1:
        raise DomainError("volumes and values must be 1-d and of equal length")
    if len(volumes) < min_points:
        raise DomainError(
            "Extrapolation needs at least %d volumes, got %d"
            % (min_points, len(volumes))
        )
    if np.any(np.diff(volumes) <= 0) or volumes[0] <= 0:
        raise DomainError("volumes must be positive and strictly increasing")
    if not np.all(np.isfinite(values)):
        raise DomainError("Cannot extrapolate non finite values")
    return volumes, values


def _project(x, y, p):
    """Best (L, c) for a fixed exponent and the RMS residual."""
    basis = np.column_stack([np.ones_like(x), x**-p])
    coef, *_ = np.linalg.lstsq(basis, y, rcond=None)
    res = y - basis @ coef
    return coef, math.sqrt(float(np.mean(res * res)))


def fit_power_law(volumes, values, settings=None):
    """Fit ``values ~ L + c V^-p``.

    The exponent is first located by variable projection on a grid, then
    refined by a bounded scalar search and polished by ``curve_fit``.
    A constant series gives ``amplitude = 0`` and ``exponent = nan``.

    :return: ``PowerLawFit`` with the amplitude expressed in volume units
    """
    settings = settings or ScalingSettings()
    volumes, values = _as_arrays(volumes, values, settings.min_points)
    scale = float(np.max(np.abs(values)))
    if float(np.ptp(values)) <= settings.abs_tol + 4 * np.finfo(float).eps * scale:
        mean = float(np.mean(values))
        residual = math.sqrt(float(np.mean((values - mean) ** 2)))
        return PowerLawFit(mean, 0.0, math.nan, residual)

    v0 = volumes[0]
    x = volumes / v0
    lo, hi = settings.exponent_min, settings.exponent_max
    grid = np.linspace(lo, min(hi, _GRID_MAX), _GRID_SIZE)
    rms = [_project(x, values, p)[1] for p in grid]
    k = int(np.argmin(rms))
    step = grid[1] - grid[0]
    found = optimize.minimize_scalar(
        lambda p: _project(x, values, p)[1],
        bounds=(max(lo, grid[k] - step), min(hi, grid[k] + step)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    p = float(found.x)
    (limit, amp), residual = _project(x, values, p)

    def model(xx, lim, c, expo):
        return lim + c * xx**-expo

    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", optimize.OptimizeWarning)
            popt, _pcov = optimize.curve_fit(
                model,
                x,
                values,
                p0=(limit, amp, p),
                bounds=([-np.inf, -np.inf, lo], [np.inf, np.inf, hi]),
                maxfev=2000,
            )
        polished = math.sqrt(float(np.mean((model(x, *popt) - values) ** 2)))
        if polished < residual:
            limit, amp, p = (float(v) for v in popt)
            residual = polished
    except (RuntimeError, ValueError) as err:
        _logger.debug("curve_fit polish skipped: %s", err)
    return PowerLawFit(float(limit), float(amp) * v0**p, p, residual)


def is_converged(values, fit, settings=None):
    settings = settings or ScalingSettings()
    values = np.asarray(values, dtype=float)
    scale = max(float(np.max(np.abs(values))), abs(fit.limit))
    if not fit.residual <= settings.threshold(scale):
        return False
    tail = values[-settings.monotone_window :]
    steps = np.diff(tail)
    noise = 3.0 * fit.residual + settings.abs_tol
    big = steps[np.abs(steps) > noise]
    return bool(np.all(big >= 0) or np.all(big <= 0))


def loglog_slope(volumes, values, last=None):
    """Slope of log(values) against log(volumes) over the ``last`` samples.

    :return: (slope, rms residual of the straight line)
    """
    volumes = np.asarray(volumes, dtype=float)
    values = np.asarray(values, dtype=float)
    if last:
        volumes = volumes[-last:]
        values = values[-last:]
    if len(volumes) < 2:
        raise DomainError("A slope needs at least two samples")
    if np.any(values <= 0) or np.any(volumes <= 0):
        raise DomainError("Log-log slope needs positive samples")
    lx, ly = np.log(volumes), np.log(values)
    slope, intercept = np.polyfit(lx, ly, 1)
    res = ly - (slope * lx + intercept)
    return float(slope), math.sqrt(float(np.mean(res * res)))
