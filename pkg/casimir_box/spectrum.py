# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Mode-by-mode view of the gas: energies, occupations, direct sums."""
import logging
import math

import numpy as np

from casimir_numerics import SeriesResult, theta3_tau
from casimir_numerics.exceptions import DomainError

from .models.box_geometry import ModeIndex
from .models.occupation_spectrum import OccupationSpectrum

_logger = logging.getLogger(__name__)

# outside the direct truncation box every mode has beta eps >= _BOX_EXPONENT
_BOX_EXPONENT = 40.0


def _axis_coefficients(geom, lam):
    lengths = np.array(geom.side_lengths)
    return math.pi * lam**2 / lengths**2, lengths


def mode_energy_beta(geom, lam, n):
    """beta eps_k = sum_nu pi lam^2 n_nu^2 / L_nu^2."""
    n = ModeIndex(*n)
    a, _lengths = _axis_coefficients(geom, lam)
    return float(np.dot(a, np.array(n, dtype=float) ** 2))


def mode_density(tp, geom, n):
    """Density of particles in mode n: (1/V) / (exp(beta eps - beta mu) - 1)."""
    tp.check_geometry(geom)
    gap = mode_energy_beta(geom, tp.lam, n) - tp.beta_mu
    return 1.0 / math.expm1(gap) / tp.V


def _box_sizes(geom, lam, n_max):
    a, _lengths = _axis_coefficients(geom, lam)
    if n_max is None:
        sizes = np.ceil(np.sqrt(_BOX_EXPONENT / a)).astype(int)
    else:
        sizes = np.broadcast_to(np.asarray(n_max, dtype=int), (3,)).copy()
    if np.any(sizes < 0):
        raise DomainError("truncation sizes must be >= 0, got %r" % (n_max,))
    return a, sizes


def _outside_bound(tp, a, sizes):
    """Density carried by the modes with some |n_nu| > sizes[nu]."""
    full = theta3_tau(np.zeros(3), a)
    axis_tails = []
    for a_nu, n_nu in zip(a, sizes):
        first = a_nu * (n_nu + 1) ** 2
        # sum_{|n| > N} e^{-a n^2} <= 2 e^{-a (N+1)^2} / (1 - e^{-a (2N+3)})
        axis_tails.append(
            2.0 * math.exp(-first) / -math.expm1(-a_nu * (2 * n_nu + 3))
        )
    outside = sum(
        axis_tails[nu] * np.prod([full[m] for m in range(3) if m != nu])
        for nu in range(3)
    )
    gap = float(min(a * (sizes + 1) ** 2)) - tp.beta_mu
    return math.exp(tp.beta_mu) * outside / -math.expm1(-gap) / tp.V


def iter_mode_slabs(tp, geom, n_max=None, X=None):
    """Yield, per value of n1, the (n2, n3) grid of mode densities.

    With a separation ``X`` each density is weighted by cos(k.X). The
    first item yielded is ``(sizes, bound)``, the truncation box and the
    bound on the density of the modes outside it.
    """
    tp.check_geometry(geom)
    a, sizes = _box_sizes(geom, tp.lam, n_max)
    yield sizes, _outside_bound(tp, a, sizes)
    lengths = np.array(geom.side_lengths)
    n2 = np.arange(-sizes[1], sizes[1] + 1)
    n3 = np.arange(-sizes[2], sizes[2] + 1)
    e23 = a[1] * n2[:, None] ** 2 + a[2] * n3[None, :] ** 2
    if X is not None:
        X = np.asarray(X, dtype=float)
        ph23 = np.exp(2j * math.pi * n2 * X[1] / lengths[1])[:, None] * np.exp(
            2j * math.pi * n3 * X[2] / lengths[2]
        )[None, :]
    for n1 in range(-sizes[0], sizes[0] + 1):
        dens = 1.0 / np.expm1(a[0] * n1 * n1 + e23 - tp.beta_mu) / tp.V
        if X is not None:
            phase = np.exp(2j * math.pi * n1 * X[0] / lengths[0]) * ph23
            dens = dens * phase.real
        yield n1, n2, n3, dens


def occupation_spectrum(tp, geom, n_max):
    """Densities of every mode with |n_nu| <= n_max (per axis or shared)."""
    slabs = iter_mode_slabs(tp, geom, n_max)
    sizes, bound = next(slabs)
    count = int(np.prod(2 * sizes + 1))
    indices = np.empty((count, 3), dtype=int)
    densities = np.empty(count, dtype=float)
    pos = 0
    for n1, n2, n3, dens in slabs:
        size = dens.size
        grid2, grid3 = np.meshgrid(n2, n3, indexing="ij")
        indices[pos : pos + size, 0] = n1
        indices[pos : pos + size, 1] = grid2.ravel()
        indices[pos : pos + size, 2] = grid3.ravel()
        densities[pos : pos + size] = dens.ravel()
        pos += size
    return OccupationSpectrum(tp.V, indices, densities, bound)


def total_density_direct(tp, geom, n_max=None):
    """rho_L as the plain sum of mode densities.

    Without ``n_max`` the box is sized so that every omitted mode has
    beta eps >= 40. Cost grows like V; meant as an oracle at modest volumes.
    """
    slabs = iter_mode_slabs(tp, geom, n_max)
    sizes, bound = next(slabs)
    total = 0.0
    for _n1, _n2, _n3, dens in slabs:
        total += float(dens.sum())
    _logger.debug("Direct density over box %s at V=%g", tuple(sizes), tp.V)
    return SeriesResult(total, bound, int(np.prod(2 * sizes + 1)))


def modes_below(geom, lam, e_max, limit=5_000_000):
    """Modes with beta eps <= e_max, sorted by increasing energy.

    :return: (indices (N, 3), energies (N,))
    """
    if e_max < 0:
        raise DomainError("e_max must be >= 0, got %r" % e_max)
    a, _lengths = _axis_coefficients(geom, lam)
    n_max = np.floor(np.sqrt(e_max / a)).astype(int)
    count = int(np.prod(2 * n_max + 1))
    if count > limit:
        raise DomainError(
            "%d modes below beta eps = %g exceed the enumeration limit %d"
            % (count, e_max, limit)
        )
    axes = [np.arange(-n, n + 1) for n in n_max]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    energies = (grid * grid) @ a
    keep = energies <= e_max
    grid, energies = grid[keep], energies[keep]
    order = np.argsort(energies, kind="stable")
    return grid[order], energies[order]
