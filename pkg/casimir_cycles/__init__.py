from . import models
from . import components
from .models.cycle_spectrum import CycleSpectrum
from .models.cycle_window import CycleWindow
from .models.hierarchy_report import HierarchyKind, HierarchyReport
from .spectrum import cycle_density, cycle_spectrum, mode_cycle_densities
from .densities import (
    long_cycle_density,
    scaled_long_cycle_density,
    short_cycle_density,
    window_limit,
    windowed_cycle_density,
)
from .hierarchy import HierarchySettings, condensate_cycle_quantile, hierarchy_detect
