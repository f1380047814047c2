# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from dataclasses import dataclass, field
from typing import Mapping, Tuple

from casimir_numerics.exceptions import DomainError


@dataclass(frozen=True)
class ScalingSettings:
    """Tolerances of the extrapolation L + c V^-p.

    A fit is converged when its RMS residual is below
    ``abs_tol + rel_tol * scale`` and the last ``monotone_window`` samples
    move in one direction, up to three residuals of noise.
    """

    rel_tol: float = 5e-3
    abs_tol: float = 1e-10
    min_points: int = 4
    exponent_min: float = 1e-6
    exponent_max: float = 10.0
    monotone_window: int = 3

    def __post_init__(self):
        if self.min_points < 3:
            raise DomainError("A three parameter fit needs min_points >= 3")
        if not (0 < self.exponent_min < self.exponent_max):
            raise DomainError("Exponent bounds must satisfy 0 < min < max")

    def threshold(self, scale):
        return self.abs_tol + self.rel_tol * scale


@dataclass(frozen=True)
class PowerLawFit:
    limit: float
    amplitude: float
    exponent: float
    residual: float

    def __call__(self, volume):
        if self.amplitude == 0.0:
            return self.limit
        return self.limit + self.amplitude * volume**-self.exponent


@dataclass(frozen=True)
class ScalingSeries:
    """Observable sampled along increasing volumes, with its extrapolation."""

    volumes: Tuple[float, ...]
    values: Tuple[float, ...]
    extrapolated_limit: float
    fit_exponent: float
    amplitude: float
    residual: float
    converged: bool
    label: str = ""
    annotations: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if len(self.volumes) != len(self.values):
            raise DomainError("volumes and values differ in length")
        if any(b <= a for a, b in zip(self.volumes, self.volumes[1:])):
            raise DomainError("volumes must be strictly increasing")

    def __len__(self):
        return len(self.volumes)

    def fit_metadata(self):
        return {
            "label": self.label,
            "extrapolated_limit": self.extrapolated_limit,
            "fit_exponent": self.fit_exponent,
            "amplitude": self.amplitude,
            "residual": self.residual,
            "converged": self.converged,
            "annotations": dict(self.annotations),
        }


@dataclass(frozen=True)
class ExponentTestResult:
    passed: bool
    hypothesis: float
    fitted: float
    margin: float
