# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass, field
from typing import Optional, Tuple

from casimir_box import BoxGeometry
from casimir_condensate import ClassifySettings, critical_density
from casimir_correlation import CoherenceSettings, SeparationPath
from casimir_cycles import CycleWindow, HierarchySettings
from casimir_cycles.spectrum import DEFAULT_MAX_COST
from casimir_scaling import ScalingSettings


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment: one geometry, one density, one volume sweep.

    Command sections carry their own options; values missing from the
    configuration keep the defaults of the settings they feed.
    """

    geometry: BoxGeometry
    lam: float
    rho: float
    volumes: Tuple[float, ...]
    out: str = "out"
    source: str = "<config>"
    scaling: ScalingSettings = field(default_factory=ScalingSettings)
    # solve-mu
    delta: Optional[float] = None
    # classify
    classify: ClassifySettings = field(default_factory=ClassifySettings)
    # cycles
    short_lengths: Tuple[int, ...] = ()
    long_exponents: Tuple[float, ...] = ()
    windows: Tuple[CycleWindow, ...] = ()
    hierarchy: Optional[HierarchySettings] = None
    spectrum_j_max: Optional[int] = None
    max_cost: float = DEFAULT_MAX_COST
    # correlate
    paths: Tuple[SeparationPath, ...] = ()
    coherence: Optional[CoherenceSettings] = None

    @property
    def alpha(self):
        return self.geometry.alpha

    @property
    def rho0(self):
        return self.rho - critical_density(self.lam)

    def summary(self):
        return {
            "source": self.source,
            "alpha": list(self.alpha),
            "lambda": self.lam,
            "rho": self.rho,
            "rho0": self.rho0,
            "volumes": list(self.volumes),
        }
