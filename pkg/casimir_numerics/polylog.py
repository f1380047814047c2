# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Bose functions g_s(z) = sum_{j>=1} z^j / j^s on 0 <= z <= 1, s > 1."""
import logging
import math

import numpy as np
from scipy import special

from .exceptions import ConvergenceError, DomainError
from .models.series_result import SeriesResult, SeriesTolerance

_logger = logging.getLogger(__name__)

_CHUNK = 4096
# below this value of eps = -log(z) the expansion around z = 1 is used
_NEAR_ONE = 1.0
# distance to an integer under which the non integer expansion loses digits
_INTEGER_SLACK = 1e-4
# Euler-Maclaurin cut for zeta(s)
_EM_CUT = 16
_EM_MAX_ORDER = 24
_MAX_EXPANSION_ORDER = 80
_TWO_PI = 2.0 * math.pi


def polylog(s, z, tolerance=None):
    """Bose function g_s(z).

    :param s: order, s > 1
    :param z: fugacity, 0 <= z <= 1
    :param tolerance: optional ``SeriesTolerance``
    :return: ``SeriesResult`` whose tail bound certifies the truncation
    """
    tol = tolerance or SeriesTolerance()
    s = float(s)
    z = float(z)
    if not (math.isfinite(s) and s > 1.0):
        raise DomainError("polylog requires s > 1, got s=%r" % s)
    if not (0.0 <= z <= 1.0):
        raise DomainError("polylog requires 0 <= z <= 1, got z=%r" % z)
    if z == 0.0:
        return SeriesResult(0.0, 0.0, 1)
    if z == 1.0:
        return _zeta(s, tol)
    eps = -math.log(z)
    nearest = round(s)
    if eps >= _NEAR_ONE:
        return _direct(s, eps, tol)
    if s == nearest:
        return _near_one(s, eps, tol, integer=True)
    if abs(s - nearest) < _INTEGER_SLACK:
        return _direct(s, eps, tol)
    return _near_one(s, eps, tol, integer=False)


def _direct(s, eps, tol):
    total = 0.0
    start = 1
    q = -math.expm1(-eps)
    while True:
        j = np.arange(start, start + _CHUNK, dtype=float)
        total += float(np.exp(-eps * j - s * np.log(j)).sum())
        nxt = start + _CHUNK
        tail = math.exp(-eps * nxt - s * math.log(nxt)) / q
        if tol.reached(tail, total):
            return SeriesResult(total, tail, nxt - 1)
        if nxt - 1 >= tol.max_terms:
            raise ConvergenceError(
                "Direct Bose series did not converge",
                diagnostics={"s": s, "eps": eps, "terms": nxt - 1, "tail": tail},
            )
        start = nxt


def _zeta(s, tol):
    # Euler-Maclaurin with remainder bounded by the first omitted term
    n = _EM_CUT
    j = np.arange(1, n, dtype=float)
    value = float(np.exp(-s * np.log(j)).sum())
    value += n ** (1.0 - s) / (s - 1.0) + 0.5 * n**-s
    bern = special.bernoulli(2 * _EM_MAX_ORDER + 2)
    rising = s
    power = float(n) ** (-s - 1.0)
    for k in range(1, _EM_MAX_ORDER + 1):
        value += bern[2 * k] / math.factorial(2 * k) * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= n * n
        bound = abs(bern[2 * k + 2] / math.factorial(2 * k + 2) * rising * power)
        if tol.reached(bound, value):
            return SeriesResult(value, bound, n - 1 + k)
    raise ConvergenceError(
        "Euler-Maclaurin zeta did not converge", diagnostics={"s": s, "bound": bound}
    )


def _log_term_bound(s, k, eps):
    """Log of the bound on |zeta(s - k) eps^k / k!| for s - k < 0."""
    x = k - s
    return (
        math.log(2.0)
        + special.gammaln(1.0 + x)
        + math.log(special.zeta(1.0 + x))
        - (1.0 + x) * math.log(_TWO_PI)
        + k * math.log(eps)
        - special.gammaln(k + 1.0)
    )


def _near_one(s, eps, tol, integer):
    # g_s(e^-eps) = singular part + sum_k zeta(s - k) (-eps)^k / k!
    if integer:
        n = int(s)
        harmonic = sum(1.0 / i for i in range(1, n))
        value = (
            (-eps) ** (n - 1) / math.factorial(n - 1) * (harmonic - math.log(eps))
        )
    else:
        n = None
        value = special.gamma(1.0 - s) * eps ** (s - 1.0)
    coeff = 1.0
    ratio = eps / _TWO_PI
    for k in range(_MAX_EXPANSION_ORDER + 1):
        if k > 0:
            coeff *= -eps / k
        if not (integer and k == n - 1):
            value += float(special.zeta(s - k)) * coeff
        if k + 1 - s >= 1.0:
            bound = math.exp(_log_term_bound(s, k + 1, eps)) / (1.0 - ratio)
            if tol.reached(bound, value):
                _logger.debug("g_%s(exp(-%s)) from %d expansion terms", s, eps, k + 1)
                return SeriesResult(value, bound, k + 1)
    raise ConvergenceError(
        "Expansion of the Bose function around z = 1 did not converge",
        diagnostics={"s": s, "eps": eps},
    )
