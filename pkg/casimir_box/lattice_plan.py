# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Split evaluation of lattice sums over the box spectrum.

Every observable of the gas is a sum over cycle lengths j of z^j times a
trace factor sum_k exp(-j beta eps_k) (possibly weighted by cos(k.X)).
For j <= J the trace is a product of three theta functions. Beyond J
only the modes with beta eps <= E_cut contribute, and for each of them
the remaining geometric series is summed in closed form. The modes above
E_cut are bounded by the trace left over at j = J.
"""
import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from casimir_numerics import SeriesResult, theta3_tau
from casimir_numerics.exceptions import DomainError

from .spectrum import modes_below

_logger = logging.getLogger(__name__)

# relative rounding allowance on the trace at j = J
_TRACE_ROUNDING = 1e-13


@dataclass(frozen=True)
class PlanSettings:
    """Knobs of the split representation.

    :param j_split: number of explicit cycle lengths J
    :param tail_exponent: J * E_cut, the decay of the dropped modes at j = J
    :param max_box: largest mode box enumerated for the low energy set;
        J is doubled until the box fits
    :param chunk: rows per block in vectorised mode sums
    """

    j_split: int = 4096
    tail_exponent: float = 45.0
    max_box: int = 2_000_000
    chunk: int = 512


class LatticePlan:
    """Precomputed traces and low-energy modes for one box and lambda."""

    def __init__(self, geom, lam, settings=None):
        self.geom = geom
        self.lam = float(lam)
        if not (math.isfinite(self.lam) and self.lam > 0):
            raise DomainError("lambda must be > 0, got %r" % lam)
        self.settings = settings or PlanSettings()
        self.V = geom.V
        self.lengths = np.array(geom.side_lengths)
        self.a = math.pi * self.lam**2 / self.lengths**2
        j_split = self.settings.j_split
        while True:
            e_cut = self.settings.tail_exponent / j_split
            n_max = np.floor(np.sqrt(e_cut / self.a)).astype(int)
            if np.prod(2 * n_max + 1) <= self.settings.max_box:
                break
            j_split *= 2
        self.j_split = j_split
        self.e_cut = e_cut
        self.j = np.arange(1, j_split + 1, dtype=float)
        self.tau = self.j[:, None] * self.a[None, :]
        self.trace = np.prod(theta3_tau(0.0, self.tau), axis=1)
        self.modes, self.energies = modes_below(
            geom, self.lam, e_cut, limit=self.settings.max_box
        )
        leftover = self.trace[-1] - float(np.exp(-j_split * self.energies).sum())
        self.remainder = max(leftover, 0.0) + _TRACE_ROUNDING * self.trace[-1]
        _logger.debug(
            "Plan V=%g alpha=%s: J=%d, %d low modes, E_cut=%.3g",
            self.V,
            geom.alpha,
            j_split,
            len(self.energies),
            e_cut,
        )

    # helpers

    def _check_beta_mu(self, beta_mu):
        if not (beta_mu < 0.0) or not math.isfinite(beta_mu):
            raise DomainError("beta_mu must be < 0, got %r" % beta_mu)

    def _gaps(self, beta_mu):
        return self.energies - beta_mu

    def _tail_bound(self, beta_mu, first=None):
        """Bound of sum_{j >= first} z^j (trace outside the low modes)."""
        J = self.j_split
        first = J + 1 if first is None else max(int(first), J + 1)
        decay = self.e_cut - beta_mu
        return (
            self.remainder
            * math.exp(J * beta_mu - (first - J) * decay)
            / -math.expm1(-decay)
        )

    def _blocks(self, *arrays):
        step = self.settings.chunk
        for start in range(0, len(self.energies), step):
            yield tuple(arr[start : start + step] for arr in arrays)

    # observables

    def density(self, beta_mu):
        self._check_beta_mu(beta_mu)
        J = self.j_split
        head = float(np.dot(np.exp(beta_mu * self.j), self.trace))
        x = self._gaps(beta_mu)
        geo = float((np.exp(-(J + 1) * x) / -np.expm1(-x)).sum())
        return SeriesResult(
            (head + geo) / self.V,
            self._tail_bound(beta_mu) / self.V,
            J + len(x),
        )

    def density_derivative(self, beta_mu):
        """d rho / d(beta mu)."""
        self._check_beta_mu(beta_mu)
        J = self.j_split
        head = float(np.dot(self.j * np.exp(beta_mu * self.j), self.trace))
        x = self._gaps(beta_mu)
        one_minus = -np.expm1(-x)
        geo = (J + 1) * np.exp(-(J + 1) * x) / one_minus
        geo += np.exp(-(J + 2) * x) / (one_minus * one_minus)
        return (head + float(geo.sum())) / self.V

    def pressure(self, beta_mu):
        """beta p = (1/V) sum_k -log(1 - exp(beta mu - beta eps_k))."""
        self._check_beta_mu(beta_mu)
        J = self.j_split
        head = float(np.dot(np.exp(beta_mu * self.j) / self.j, self.trace))
        geo = 0.0
        for (x,) in self._blocks(self._gaps(beta_mu)):
            partial = (np.exp(-np.outer(x, self.j)) / self.j).sum(axis=1)
            geo += float((-np.log1p(-np.exp(-x)) - partial).sum())
        bound = self._tail_bound(beta_mu) / (J + 1)
        terms = J + len(self.energies)
        return SeriesResult((head + geo) / self.V, bound / self.V, terms)

    def cycle_density(self, beta_mu, j):
        """Density of particles in cycles of length exactly j."""
        self._check_beta_mu(beta_mu)
        j = int(j)
        if j < 1:
            raise DomainError("cycle length must be >= 1, got %r" % j)
        if j <= self.j_split:
            value = math.exp(beta_mu * j) * self.trace[j - 1]
            return SeriesResult(value / self.V, 0.0, 1)
        x = self._gaps(beta_mu)
        value = float(np.exp(-j * x).sum())
        bound = self._tail_bound(beta_mu, j) * -math.expm1(-(self.e_cut - beta_mu))
        return SeriesResult(value / self.V, bound / self.V, len(x))

    def cycle_densities(self, beta_mu, j_max):
        """Densities of cycle lengths 1 .. j_max and the summed bound."""
        self._check_beta_mu(beta_mu)
        J = self.j_split
        j_max = int(j_max)
        head = min(j_max, J)
        out = np.empty(j_max, dtype=float)
        out[:head] = np.exp(beta_mu * self.j[:head]) * self.trace[:head] / self.V
        bound = 0.0
        if j_max > J:
            x = self._gaps(beta_mu)
            lengths = np.arange(J + 1, j_max + 1, dtype=float)
            step = max(1, self.settings.chunk * 64 // max(len(x), 1))
            for start in range(0, len(lengths), step):
                js = lengths[start : start + step]
                stop = J + start + len(js)
                out[J + start : stop] = np.exp(-np.outer(js, x)).sum(axis=1)
            out[J:] /= self.V
            bound = self._tail_bound(beta_mu) / self.V
        return out, bound

    def cycle_window(self, beta_mu, first, last=None):
        """Density in cycles with first <= j <= last; ``last=None`` is open."""
        self._check_beta_mu(beta_mu)
        J = self.j_split
        first = max(int(first), 1)
        if last is not None:
            last = int(last)
            if last < first:
                return SeriesResult(0.0, 0.0, 1)
        value = 0.0
        terms = 0
        head_last = J if last is None else min(last, J)
        if first <= head_last:
            sl = slice(first - 1, head_last)
            value += float(np.dot(np.exp(beta_mu * self.j[sl]), self.trace[sl]))
            terms += head_last - first + 1
        bound = 0.0
        start = max(first, J + 1)
        if last is None or start <= last:
            x = self._gaps(beta_mu)
            top = np.exp(-start * x)
            if last is not None:
                top = top - np.exp(-(last + 1) * x)
            value += float((top / -np.expm1(-x)).sum())
            bound = self._tail_bound(beta_mu, start)
            terms += len(x)
        return SeriesResult(value / self.V, bound / self.V, max(terms, 1))

    def correlation(self, beta_mu, X):
        """sigma_L(X) = (1/V) sum_k cos(k.X) / (exp(beta eps_k - beta mu) - 1)."""
        self._check_beta_mu(beta_mu)
        X = np.asarray(X, dtype=float)
        if X.shape != (3,):
            raise DomainError("separation must have three components")
        J = self.j_split
        u = math.pi * X / self.lengths
        trace = np.prod(theta3_tau(u[None, :], self.tau), axis=1)
        head = float(np.dot(np.exp(beta_mu * self.j), trace))
        x = self._gaps(beta_mu)
        phase = np.cos(2.0 * math.pi * (self.modes @ (X / self.lengths)))
        geo = float((phase * np.exp(-(J + 1) * x) / -np.expm1(-x)).sum())
        return SeriesResult(
            (head + geo) / self.V, self._tail_bound(beta_mu) / self.V, J + len(x)
        )

    def mode_densities(self, beta_mu):
        """rho_L(k) for the low-energy modes, aligned with ``self.modes``."""
        self._check_beta_mu(beta_mu)
        return 1.0 / np.expm1(self._gaps(beta_mu)) / self.V


@functools.lru_cache(maxsize=64)
def get_plan(geom, lam, settings=None):
    """Shared plan for a box and thermal wavelength."""
    return LatticePlan(geom, lam, settings)
