# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass

import numpy as np

from .box_geometry import ModeIndex


@dataclass(frozen=True, eq=False)
class OccupationSpectrum:
    """Mode densities rho_L(k) inside a truncation box.

    ``indices`` is an (N, 3) integer array aligned with ``densities``.
    ``tail_bound`` bounds the density carried by the modes left out.
    """

    V: float
    indices: np.ndarray
    densities: np.ndarray
    tail_bound: float

    def __len__(self):
        return len(self.densities)

    def __iter__(self):
        for idx, dens in zip(self.indices, self.densities):
            yield ModeIndex(*(int(i) for i in idx)), float(dens)

    @property
    def total(self):
        return float(self.densities.sum())

    def density_of(self, n):
        hit = np.flatnonzero(np.all(self.indices == np.asarray(n), axis=1))
        if not len(hit):
            raise KeyError(tuple(n))
        return float(self.densities[hit[0]])

    def occupations(self):
        """Particle numbers V * rho_L(k)."""
        return self.densities * self.V

    def largest(self, count):
        order = np.argsort(self.densities)[::-1][:count]
        return [
            (ModeIndex(*(int(i) for i in self.indices[k])), float(self.densities[k]))
            for k in order
        ]
