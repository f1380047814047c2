# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple


class CoherenceKind(str, Enum):
    MACROSCOPIC = "macroscopic"
    MICROSCOPIC = "microscopic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class AxisCoherence:
    """Order V^exponent of the coherence length along one axis.

    A macroscopic axis keeps correlation at half its side; its exponent
    is alpha_nu. A microscopic axis loses it beyond V^exponent < L_nu.
    """

    axis: int
    kind: CoherenceKind
    exponent: float
    expected: float
    half_period_limit: float
    evidence: Dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    def as_dict(self):
        return {
            "axis": self.axis,
            "kind": self.kind.value,
            "exponent": self.exponent,
            "expected": self.expected,
            "half_period_limit": self.half_period_limit,
            "reason": self.reason,
            "evidence": dict(self.evidence),
        }


@dataclass(frozen=True)
class CoherenceReport:
    axes: Tuple[AxisCoherence, ...]

    def __getitem__(self, axis):
        return self.axes[axis]

    @property
    def kinds(self):
        return tuple(a.kind for a in self.axes)

    @property
    def conclusive(self):
        return CoherenceKind.INCONCLUSIVE not in self.kinds

    def as_dict(self):
        return {"axes": [a.as_dict() for a in self.axes]}
