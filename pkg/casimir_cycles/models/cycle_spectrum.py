# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass

import numpy as np

from casimir_numerics.exceptions import DomainError


@dataclass(frozen=True, eq=False)
class CycleSpectrum:
    """Densities rho_{L,j} for j = 1 .. j_max at one volume.

    ``tail`` is the density carried by cycles longer than j_max and
    ``tail_bound`` bounds the error of ``tail`` plus the head truncation.
    """

    V: float
    beta_mu: float
    densities: np.ndarray
    tail: float
    tail_bound: float

    def __post_init__(self):
        if self.densities.ndim != 1 or not len(self.densities):
            raise DomainError("A cycle spectrum needs at least one cycle length")
        if np.any(self.densities <= 0):
            raise DomainError("Cycle densities must be positive")

    def __len__(self):
        return len(self.densities)

    @property
    def j_max(self):
        return len(self.densities)

    @property
    def total(self):
        return float(self.densities.sum()) + self.tail

    def density(self, j):
        if not 1 <= j <= self.j_max:
            raise DomainError("cycle length %r outside 1 .. %d" % (j, self.j_max))
        return float(self.densities[j - 1])
