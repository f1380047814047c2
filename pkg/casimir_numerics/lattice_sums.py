# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Lorentzian sums over Z that fix the TypeII condensate."""
import math

import numpy as np

from .exceptions import DomainError
from .models.series_result import SeriesResult


def _check(B, lam):
    if not (math.isfinite(B) and B > 0.0):
        raise DomainError("B must be > 0, got %r" % B)
    if not (math.isfinite(lam) and lam > 0.0):
        raise DomainError("lambda must be > 0, got %r" % lam)


def lattice_lorentz_sum(B, lam):
    """Closed form of sum_{n in Z} 1 / (B + pi lam^2 n^2).

    Equals pi coth(x) / (lam^2 x) with x = sqrt(pi B) / lam. Tends to
    1/B as B -> 0 and to sqrt(pi) / (lam sqrt(B)) as B -> oo.
    """
    return lattice_lorentz_cosine_sum(B, lam, 0.0)


def lattice_lorentz_cosine_sum(B, lam, y):
    """Closed form of sum_{n in Z} cos(2 pi n y) / (B + pi lam^2 n^2).

    ``y`` is reduced to [0, 1). The result is
    pi cosh(x (1 - 2y)) / (lam^2 x sinh x) with x = sqrt(pi B) / lam.
    """
    B = float(B)
    lam = float(lam)
    _check(B, lam)
    y = float(y) % 1.0
    x = math.sqrt(math.pi * B) / lam
    # cosh(x(1 - 2y)) / sinh(x) without overflow
    ratio = (math.exp(-2.0 * x * y) + math.exp(-2.0 * x * (1.0 - y))) / -math.expm1(
        -2.0 * x
    )
    return math.pi * ratio / (lam * lam * x)


def lattice_lorentz_partial(B, lam, n_max, y=0.0):
    """Direct sum over |n| <= n_max of cos(2 pi n y) / (B + pi lam^2 n^2).

    The tail bound is 2 / (pi lam^2 n_max), the integral bound of the
    omitted terms on both sides.
    """
    B = float(B)
    lam = float(lam)
    _check(B, lam)
    n_max = int(n_max)
    if n_max < 0:
        raise DomainError("n_max must be >= 0, got %r" % n_max)
    n = np.arange(-n_max, n_max + 1, dtype=float)
    value = float(
        (np.cos(2.0 * math.pi * n * y) / (B + math.pi * lam * lam * n * n)).sum()
    )
    if n_max == 0:
        # the missing |n| >= 1 terms are bounded by 2 sum 1/(pi lam^2 n^2)
        bound = math.pi / (3.0 * lam * lam)
    else:
        bound = 2.0 / (math.pi * lam * lam * n_max)
    return SeriesResult(value, bound, 2 * n_max + 1)
