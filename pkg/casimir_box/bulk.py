# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Infinite-volume (continuum) counterparts of the box observables.

Subtracting them from box quantities isolates the part carried by the
condensate.
"""
import math

import numpy as np
from scipy import optimize, special

from casimir_numerics import SeriesResult, polylog
from casimir_numerics.exceptions import DomainError

# explicit partial sums are used below this cycle length
_EXPLICIT_MAX = 4096
# r^2 pi / lambda^2 above which the Poisson form is used
_POISSON_MIN = 10.0
_POISSON_EXP_CUT = 40.0
_EXPANSION_ORDER = 24


def _fugacity(beta_mu):
    if not (beta_mu <= 0.0) or math.isnan(beta_mu):
        raise DomainError("beta_mu must be <= 0, got %r" % beta_mu)
    return math.exp(beta_mu)


def bulk_density(beta_mu, lam):
    """g_{3/2}(e^{beta mu}) / lambda^3."""
    return polylog(1.5, _fugacity(beta_mu)).scaled(1.0 / lam**3)


def bulk_cycle_density(beta_mu, lam, j):
    """e^{j beta mu} / (lambda^3 j^{3/2}) for scalar or array j."""
    _fugacity(beta_mu)
    j = np.asarray(j, dtype=float)
    res = np.exp(beta_mu * j - 1.5 * np.log(j)) / lam**3
    return float(res) if res.ndim == 0 else res


def _partial(beta_mu, s, count):
    j = np.arange(1, count + 1, dtype=float)
    return float(np.exp(beta_mu * j - s * np.log(j)).sum())


def bulk_cycle_tail(beta_mu, lam, first):
    """sum_{j >= first} e^{j beta mu} / (lambda^3 j^{3/2})."""
    z = _fugacity(beta_mu)
    first = max(int(first), 1)
    if first <= _EXPLICIT_MAX:
        total = polylog(1.5, z).value
        return max(total - _partial(beta_mu, 1.5, first - 1), 0.0) / lam**3
    # Euler-Maclaurin from the closed integral
    # int_a^oo e^{-eps t} t^{-3/2} dt
    #   = e^{-eps a} (2 / sqrt(a) - 2 sqrt(pi eps) erfcx(sqrt(eps a)))
    eps = -beta_mu
    a = float(first)
    root = math.sqrt(eps * a)
    integral = math.exp(-eps * a) * (
        2.0 / math.sqrt(a) - 2.0 * math.sqrt(math.pi * eps) * special.erfcx(root)
    )
    f = math.exp(-eps * a) * a**-1.5
    df = -f * (eps + 1.5 / a)
    return max(integral + 0.5 * f - df / 12.0, 0.0) / lam**3


def bulk_cycle_window(beta_mu, lam, first, last=None):
    first = max(int(first), 1)
    if last is None:
        return bulk_cycle_tail(beta_mu, lam, first)
    if int(last) < first:
        return 0.0
    return bulk_cycle_tail(beta_mu, lam, first) - bulk_cycle_tail(
        beta_mu, lam, int(last) + 1
    )


def bulk_correlation(beta_mu, lam, r):
    """sum_j e^{j beta mu} e^{-pi r^2 / (j lam^2)} / (lambda^3 j^{3/2}).

    Large separations use Poisson summation over j, which is exact up to
    the bound reported; the leading term is e^{-2 r sqrt(-pi beta mu)/lam} / (lam^2 r).
    """
    z = _fugacity(beta_mu)
    r = float(r)
    if r < 0:
        raise DomainError("separation must be >= 0, got %r" % r)
    if r == 0.0:
        return bulk_density(beta_mu, lam)
    a = math.pi * r * r / lam**2
    eps = -beta_mu
    if a >= _POISSON_MIN:
        m_max = int(math.ceil(_POISSON_EXP_CUT**2 / (4.0 * math.pi * a)))
        m = np.arange(-m_max, m_max + 1)
        roots = np.sqrt(a * (eps + 2j * math.pi * m))
        value = math.sqrt(math.pi / a) * float(np.exp(-2.0 * roots).real.sum())
        # sum_{m > M} e^{-2 sqrt(pi m a)} <= int_M^oo, for both signs of m
        edge = 2.0 * math.sqrt(math.pi * a * m_max)
        bound = (
            2.0
            * math.sqrt(math.pi / a)
            * math.exp(-edge)
            * (edge + 1.0)
            / (2.0 * math.pi * a)
        )
        return SeriesResult(value / lam**3, bound / lam**3, len(m))
    # explicit head, then exp(-a/j) expanded over the tail j > head
    head = int(max(1024, math.ceil(40.0 * a)))
    j = np.arange(1, head + 1, dtype=float)
    value = float(np.exp(beta_mu * j - a / j - 1.5 * np.log(j)).sum())
    coeff = 1.0
    bound = 0.0
    for k in range(_EXPANSION_ORDER):
        if k:
            coeff *= -a / k
        s = 1.5 + k
        tail = max(polylog(s, z).value - _partial(beta_mu, s, head), 0.0)
        value += coeff * tail
        # alternating series with decreasing terms
        bound = abs(coeff) * a / (k + 1) * tail / head
        if bound <= 1e-16 * abs(value):
            break
    return SeriesResult(value / lam**3, bound / lam**3, head + k + 1)


def bulk_chemical_potential(lam, rho):
    """Infinite-volume root of rho = g_{3/2}(e^{beta mu}) / lambda^3, rho < rho_c."""
    target = rho * lam**3
    zeta = polylog(1.5, 1.0).value
    if not (0.0 < target < zeta):
        raise DomainError(
            "rho lambda^3 = %r has no bulk root, it must lie in (0, zeta(3/2))" % target
        )
    # g(z) <= z / (1 - z) brackets the root from below
    lower = math.log(target / (1.0 + target))
    t_lo, t_hi = math.log(1e-300), math.log(-lower)

    def residual(t):
        return polylog(1.5, math.exp(-math.exp(t))).value - target

    if residual(t_lo) <= 0.0:
        raise DomainError("rho lambda^3 = %r is too close to critical" % target)
    t_root = optimize.brentq(residual, t_lo, t_hi, xtol=1e-14, rtol=8.9e-16)
    return -math.exp(t_root)
