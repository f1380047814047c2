from . import exceptions
from . import models
from .models.series_result import SeriesResult, SeriesTolerance
from .polylog import polylog
from .theta import theta3, theta3_tau
from .lattice_sums import (
    lattice_lorentz_sum,
    lattice_lorentz_cosine_sum,
    lattice_lorentz_partial,
)
from .special import erf_std
