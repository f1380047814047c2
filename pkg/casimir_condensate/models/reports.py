# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from casimir_box import ModeIndex
from casimir_numerics.exceptions import DomainError
from casimir_scaling import ScalingSeries

from .regime import Regime, Verdict


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    expected: Optional[Regime]
    rho0: float
    zero_mode_fraction: float
    predictions: Dict[str, float] = field(default_factory=dict)
    evidence: Dict[str, ScalingSeries] = field(default_factory=dict)
    agreement: Dict[str, bool] = field(default_factory=dict)
    reason: str = ""

    @property
    def conclusive(self):
        return self.verdict is not Verdict.INCONCLUSIVE

    def as_dict(self):
        return {
            "verdict": self.verdict.value,
            "expected": self.expected.value if self.expected else None,
            "rho0": self.rho0,
            "zero_mode_fraction": self.zero_mode_fraction,
            "predictions": dict(self.predictions),
            "agreement": dict(self.agreement),
            "reason": self.reason,
            "evidence": {k: s.fit_metadata() for k, s in self.evidence.items()},
        }


@dataclass(frozen=True)
class FragmentationReport:
    """Condensate modes at one volume.

    ``N0`` is the particle number in the condensate window and ``M`` the
    number of modes holding at least ``threshold * N`` particles, with
    N = rho V. ``occupations`` are the largest particle numbers n_i in
    decreasing order. ``participation`` counts the most occupied modes
    needed to hold ``quantile`` of N0.
    """

    V: float
    beta_mu: float
    rho0: float
    N0: float
    M: int
    threshold: float
    occupations: Tuple[float, ...] = ()
    top_modes: List[Tuple[ModeIndex, float]] = field(default_factory=list)
    window_energy: float = 0.0
    mode_count: int = 0
    participation: int = 0
    quantile: float = 0.5

    def __post_init__(self):
        if self.M < 0:
            raise DomainError("M must be >= 0, got %r" % self.M)
        listed = math.fsum(self.occupations)
        if listed > self.N0 * (1.0 + 1e-9):
            raise DomainError(
                "listed occupations %.17g exceed N0=%.17g" % (listed, self.N0)
            )
        object.__setattr__(self, "occupations", tuple(self.occupations))

    @property
    def condensate_density(self):
        return self.N0 / self.V

    @property
    def fraction(self):
        if self.rho0 <= 0:
            return 0.0
        return self.condensate_density / self.rho0
