# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import logging
from dataclasses import dataclass
from typing import Optional

from casimir_numerics.exceptions import NoComponentError

from ..models.regime import CondensateConstants, Regime

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegimeWork:
    """Work context handed to regime components."""

    regime: Regime
    lam: float
    rho0: float
    alpha1: Optional[float] = None
    constants: Optional[CondensateConstants] = None


class RegimeComponent(object):
    """Generic mixin for all regime-bound components.

    Subclasses declaring a ``_usage`` are registered on definition.
    A component without ``_regime`` is a generic fallback for its usage.
    """

    _name = "regime.component.base"
    _usage = None
    _regime = None

    _registry = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls._usage:
            RegimeComponent._registry.setdefault(cls._usage, []).append(cls)

    def __init__(self, work):
        self.work = work
        self.constants = work.constants

    @staticmethod
    def _match_attrs():
        """Attributes to be used for matching this component.

        NOTE: the class attribute must have an underscore, the name here not.
        """
        return ("regime",)

    @classmethod
    def _component_match(cls, work, **kw):
        for attr in cls._match_attrs():
            expected = getattr(cls, "_" + attr)
            if expected not in (None, getattr(work, attr)):
                return False
        return True

    def _require_constants(self):
        if self.constants is None:
            raise NoComponentError(
                "%s needs the condensate constants in its work context" % self._name
            )
        return self.constants


def _component_sort_key(component_class):
    """Specific components before generic ones."""
    return (1 if component_class._regime else 0,)


def find_component(usage, work, safe=False):
    """Retrieve the component of ``usage`` matching the work context.

    :param usage: registered usage, e.g. ``condensate.profile``
    :param work: ``RegimeWork``
    :param safe: if true return None instead of raising when nothing matches
    """
    candidates = [
        comp
        for comp in RegimeComponent._registry.get(usage, [])
        if comp._component_match(work)
    ]
    if not candidates:
        if safe:
            return None
        raise NoComponentError(
            "No component for usage %r and regime %r" % (usage, work.regime)
        )
    candidates.sort(key=_component_sort_key, reverse=True)
    _logger.debug("Component %s selected for %s", candidates[0]._name, usage)
    return candidates[0](work)
