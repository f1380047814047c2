from . import models
from . import components
from .models.regime import CondensateConstants, Regime, Verdict
from .models.scale_function import ScaleFunction
from .models.reports import ClassificationReport, FragmentationReport
from .components.base import RegimeComponent, RegimeWork, find_component
from .critical import (
    critical_density,
    density_from_offset,
    regime_for_alpha,
    solve_constant,
)
from .scaled import (
    limiting_occupation_profile,
    scaled_condensate_density,
    scaled_condensate_limit,
    zero_mode_fraction_series,
)
from .classify import ClassifySettings, classify
from .fragmentation import fragmentation_report
