# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class CorrelationProfile:
    """sigma_L at a set of separations of one box.

    ``density`` is rho_L, the value at zero separation.
    """

    V: float
    beta_mu: float
    separations: np.ndarray
    values: np.ndarray
    bounds: np.ndarray
    density: float

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(map(tuple, self.separations), self.values))

    @property
    def normalised(self):
        return self.values / self.density

    def max_bound(self):
        return float(np.max(self.bounds)) if len(self.bounds) else 0.0
