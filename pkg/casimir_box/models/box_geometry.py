# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import dataclasses
import math
from typing import NamedTuple, Tuple

from casimir_numerics.exceptions import DomainError

ALPHA_TOL = 1e-12


class ModeIndex(NamedTuple):
    """Integer label of the momentum k = 2 pi (n1/L1, n2/L2, n3/L3)."""

    n1: int
    n2: int
    n3: int


@dataclasses.dataclass(frozen=True)
class BoxGeometry:
    """Periodic box with sides L_nu = V^alpha_nu.

    The exponents are ordered decreasingly and sum to one, so the box
    keeps its Casimir shape while the volume grows.
    """

    alpha: Tuple[float, float, float]
    V: float = 1.0

    def __post_init__(self):
        try:
            alpha = tuple(float(a) for a in self.alpha)
        except (TypeError, ValueError) as err:
            raise DomainError("alpha must be three reals: %s" % err) from err
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != 3:
            raise DomainError("alpha needs three exponents, got %d" % len(alpha))
        if not (alpha[0] >= alpha[1] >= alpha[2] > 0.0):
            raise DomainError(
                "alpha must satisfy alpha1 >= alpha2 >= alpha3 > 0, got %r" % (alpha,)
            )
        if abs(sum(alpha) - 1.0) > ALPHA_TOL:
            raise DomainError("alpha must sum to 1, got %r" % sum(alpha))
        V = float(self.V)
        object.__setattr__(self, "V", V)
        if not (math.isfinite(V) and V > 0.0):
            raise DomainError("V must be > 0, got %r" % self.V)

    @property
    def alpha1(self):
        return self.alpha[0]

    @property
    def side_lengths(self):
        return tuple(self.V**a for a in self.alpha)

    def at_volume(self, V):
        return dataclasses.replace(self, V=V)
