# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""The experiments behind each command.

Every command takes an ``ExperimentConfig`` and returns the rows of its
table and the metadata of its JSON sidecar.
"""
import logging
import math
import warnings

from casimir_box import (
    bulk_chemical_potential,
    chemical_potential_series,
    solve_chemical_potential,
    total_density_cycles,
)
from casimir_condensate import (
    classify,
    critical_density,
    regime_for_alpha,
    solve_constant,
)
from casimir_correlation import coherence_length, odlro_profile
from casimir_cycles import (
    cycle_spectrum,
    hierarchy_detect,
    long_cycle_density,
    scaled_long_cycle_density,
    short_cycle_density,
    windowed_cycle_density,
)
from casimir_numerics.exceptions import EmptyWindowError, PathViolationError

from .output import make_table

_logger = logging.getLogger(__name__)


def _swallable_exceptions():
    # rejected inputs become rows with a reason, the run goes on
    return (PathViolationError, EmptyWindowError)


def _metadata(command, config, **values):
    res = {"command": command, "config": config.summary()}
    res.update(values)
    return res


def _default_delta(config):
    if config.rho0 <= 0:
        return 0.0
    alpha1 = config.geometry.alpha1
    return regime_for_alpha(alpha1).natural_exponent(alpha1)


def cmd_solve_mu(config, n_jobs=None):
    """-beta_mu V^delta over the sweep.

    Above rho_c it extrapolates to the constant A, B or C of the regime;
    below rho_c (delta = 0) to the bulk root of rho = g_{3/2}(e^{beta mu}) / lambda^3.
    """
    geom, lam, rho = config.geometry, config.lam, config.rho
    delta = config.delta if config.delta is not None else _default_delta(config)
    series = chemical_potential_series(
        geom,
        lam,
        rho,
        config.volumes,
        exponent=delta,
        settings=config.scaling,
        n_jobs=n_jobs,
    )
    rows = []
    for volume, scaled in zip(series.volumes, series.values):
        tp = solve_chemical_potential(geom.at_volume(volume), lam, rho)
        rows.append((volume, tp.beta_mu, scaled))
    regime = regime_for_alpha(geom.alpha1)
    if config.rho0 > 0:
        analytic = solve_constant(regime, lam, config.rho0, alpha1=geom.alpha1).constant
        natural = regime.natural_exponent(geom.alpha1)
        if abs(delta - natural) > 1e-12:
            # off the natural rate the scaled potential goes to 0 or diverges
            analytic = 0.0 if delta < natural else math.inf
    elif delta == 0:
        analytic = -bulk_chemical_potential(lam, rho)
    else:
        analytic = math.inf if delta > 0 else 0.0
    metadata = _metadata(
        "solve-mu",
        config,
        delta=delta,
        expected_regime=regime.value if config.rho0 > 0 else None,
        analytic_constant=analytic,
        fitted_constant=series.extrapolated_limit,
        fit=series.fit_metadata(),
    )
    return make_table("solve-mu", rows), metadata


def cmd_classify(config, n_jobs=None):
    """Condensation type from the zero-mode fraction and the eta_delta scan."""
    report = classify(
        config.geometry,
        config.lam,
        config.rho,
        config.volumes,
        config.classify,
        n_jobs=n_jobs,
    )
    rows = []
    for label in sorted(report.evidence):
        series = report.evidence[label]
        rows.extend((label, v, x) for v, x in zip(series.volumes, series.values))
    metadata = _metadata("classify", config, report=report.as_dict())
    return make_table("classify", rows), metadata


def _cycle_series(config, n_jobs):
    geom, lam, rho, volumes = config.geometry, config.lam, config.rho, config.volumes
    settings = config.scaling
    yield "rho_long", lambda: long_cycle_density(
        geom, lam, rho, volumes, settings, n_jobs
    )
    for M in config.short_lengths:
        yield "rho_short[M=%d]" % M, lambda M=M: short_cycle_density(
            geom, lam, rho, volumes, M, settings, n_jobs
        )
    for exponent in config.long_exponents:
        yield "rho_long[V^%g]" % exponent, lambda e=exponent: scaled_long_cycle_density(
            geom, lam, rho, e, volumes, settings=settings, n_jobs=n_jobs
        )
    for window in config.windows:
        yield "window%s" % window.label(), lambda w=window: windowed_cycle_density(
            geom, lam, rho, w, volumes, settings, n_jobs
        )


def cmd_cycles(config, n_jobs=None):
    """Short, long and windowed cycle densities, and the cycle hierarchy."""
    rows = []
    quantities = {}
    rejected = {}
    for name, compute in _cycle_series(config, n_jobs):
        try:
            series = compute()
        except _swallable_exceptions() as err:
            _logger.warning("%s rejected: %s", name, err)
            rejected[name] = str(err)
            continue
        rows.extend((name, v, x) for v, x in zip(series.volumes, series.values))
        quantities[name] = series.fit_metadata()
    metadata = _metadata("cycles", config, quantities=quantities, rejected=rejected)
    if config.spectrum_j_max:
        volume = config.volumes[-1]
        box = config.geometry.at_volume(volume)
        tp = solve_chemical_potential(box, config.lam, config.rho)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            spectrum = cycle_spectrum(
                tp, box, j_max=config.spectrum_j_max, max_cost=config.max_cost
            )
        rows.extend(
            ("rho_j[%d]" % j, volume, float(value))
            for j, value in enumerate(spectrum.densities, start=1)
        )
        metadata["spectrum"] = {
            "V": volume,
            "j_max": spectrum.j_max,
            "requested_j_max": config.spectrum_j_max,
            "tail": spectrum.tail,
            "tail_bound": spectrum.tail_bound,
            "warnings": [str(w.message) for w in caught],
        }
    if config.hierarchy is not None:
        if config.rho0 > 0:
            metadata["hierarchy"] = hierarchy_detect(
                config.geometry,
                config.lam,
                config.rho,
                config.volumes,
                config.hierarchy,
                n_jobs=n_jobs,
            ).as_dict()
        else:
            metadata["hierarchy"] = {"kind": "no_condensate"}
    return make_table("cycles", rows), metadata


def cmd_correlate(config, n_jobs=None):
    """sigma_L along every configured separation path.

    Paths leaving the half-period are not evaluated; they get one row
    with status ``rejected`` and the reason.
    """
    geom, lam, rho = config.geometry, config.lam, config.rho
    rows = []
    paths = {}
    nan = math.nan
    for path in config.paths:
        label = path.label()
        try:
            series = odlro_profile(
                geom,
                lam,
                rho,
                path,
                config.volumes,
                settings=config.scaling,
                n_jobs=n_jobs,
            )
        except _swallable_exceptions() as err:
            _logger.warning("path %s rejected: %s", label, err)
            rows.append((label, nan, nan, nan, nan, nan, nan, "rejected", str(err)))
            paths[label] = {"status": "rejected", "reason": str(err)}
            continue
        for volume, sigma in zip(series.volumes, series.values):
            box = geom.at_volume(volume)
            tp = solve_chemical_potential(box, lam, rho)
            X = path.at(volume)
            density = total_density_cycles(tp, box).value
            rows.append((label, volume, X[0], X[1], X[2], sigma, density, "ok", ""))
        paths[label] = dict(series.fit_metadata(), status="ok")
    metadata = _metadata("correlate", config, paths=paths)
    if config.coherence is not None:
        if rho > critical_density(lam):
            metadata["coherence"] = coherence_length(
                geom, lam, rho, config.volumes, config.coherence, n_jobs=n_jobs
            ).as_dict()
        else:
            metadata["coherence"] = {"axes": [], "reason": "no condensate"}
    return make_table("correlate", rows), metadata


COMMANDS = {
    "solve-mu": cmd_solve_mu,
    "classify": cmd_classify,
    "cycles": cmd_cycles,
    "correlate": cmd_correlate,
}
