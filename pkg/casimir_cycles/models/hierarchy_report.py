# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class HierarchyKind(str, Enum):
    MACROSCOPIC = "macroscopic"
    LONG_MICROSCOPIC = "long_microscopic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class HierarchyReport:
    """Order V^exponent of the cycles carrying the condensate.

    ``expected`` is the exponent predicted from alpha1, kept for
    comparison only.
    """

    kind: HierarchyKind
    exponent: float
    expected: float
    slope: float
    capture: float
    evidence: Dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    @property
    def conclusive(self):
        return self.kind is not HierarchyKind.INCONCLUSIVE

    def as_dict(self):
        return {
            "kind": self.kind.value,
            "exponent": self.exponent,
            "expected": self.expected,
            "slope": self.slope,
            "capture": self.capture,
            "reason": self.reason,
            "evidence": dict(self.evidence),
        }
