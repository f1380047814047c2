# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from casimir_numerics.exceptions import InconclusiveError

from .models.scaling_series import ExponentTestResult


def exponent_test(series, hypothesis_p, tol=0.05):
    """Check the fitted decay exponent of ``series`` against ``hypothesis_p``.

    Unconverged series are refused. ``margin`` is positive when the test
    passes, and measures the room left within ``tol``.
    """
    if not series.converged:
        raise InconclusiveError(
            "Series %s is not converged (residual %.3g), exponent not testable"
            % (series.label, series.residual)
        )
    if math.isnan(series.fit_exponent):
        raise InconclusiveError("Series %s is constant, no exponent" % series.label)
    margin = tol - abs(series.fit_exponent - hypothesis_p)
    return ExponentTestResult(
        passed=margin >= 0,
        hypothesis=float(hypothesis_p),
        fitted=series.fit_exponent,
        margin=margin,
    )
