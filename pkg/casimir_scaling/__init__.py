from . import models
from .models.scaling_series import (
    ExponentTestResult,
    PowerLawFit,
    ScalingSeries,
    ScalingSettings,
)
from .fitting import fit_power_law, loglog_slope
from .sweep import build_series, run_sweep, volume_sequence
from .hypothesis import exponent_test
