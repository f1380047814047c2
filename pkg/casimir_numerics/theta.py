# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

import numpy as np

from .exceptions import DomainError

# terms below exp(-_EXP_CUT) relative to the leading one are dropped
_EXP_CUT = 40.0


def theta3(u, q):
    """Jacobi theta function theta_3(u, q) = sum_n q^(n^2) exp(2inu).

    Works for any real ``u`` and ``0 <= q < 1``. Small nomes use the
    direct series, large nomes the modular dual.
    """
    q = float(q)
    if not (0.0 <= q < 1.0):
        raise DomainError("theta3 requires 0 <= q < 1, got q=%r" % q)
    if q == 0.0:
        return 1.0
    return theta3_tau(u, -math.log(q))


def theta3_tau(u, tau):
    """Vectorised theta_3(u, exp(-tau)) for tau > 0.

    ``u`` and ``tau`` broadcast against each other.
    """
    u = np.asarray(u, dtype=float)
    tau = np.asarray(tau, dtype=float)
    if not np.all(np.isfinite(u)):
        raise DomainError("theta3 requires a finite argument")
    if not np.all(tau > 0.0) or not np.all(np.isfinite(tau)):
        raise DomainError("theta3 requires tau > 0")
    u, tau = np.broadcast_arrays(u, tau)
    u = u - math.pi * np.round(u / math.pi)
    out = np.empty(u.shape, dtype=float)
    direct = tau >= math.pi
    if direct.any():
        out[direct] = _direct(u[direct], tau[direct])
    if not direct.all():
        dual = ~direct
        out[dual] = _dual(u[dual], tau[dual])
    if out.ndim == 0:
        return float(out)
    return out


def _direct(u, tau):
    n_max = int(math.ceil(math.sqrt(_EXP_CUT / tau.min()))) + 1
    n = np.arange(1, n_max + 1, dtype=float)[:, None]
    terms = np.exp(-tau[None, :] * n * n) * np.cos(2.0 * n * u[None, :])
    return 1.0 + 2.0 * terms.sum(axis=0)


def _dual(u, tau):
    # theta_3(u, e^-tau) = sqrt(pi / tau) sum_m exp(-(u - pi m)^2 / tau)
    m_max = int(math.ceil(math.sqrt(_EXP_CUT * tau.max() / math.pi**2 + 0.25)))
    m = np.arange(-m_max, m_max + 1, dtype=float)[:, None]
    shift = u[None, :] - math.pi * m
    terms = np.exp(-(shift * shift) / tau[None, :])
    return np.sqrt(math.pi / tau) * terms.sum(axis=0)
