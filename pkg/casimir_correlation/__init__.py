from . import models
from . import components
from .models.separation_path import SeparationPath
from .models.correlation_profile import CorrelationProfile
from .models.coherence_report import AxisCoherence, CoherenceKind, CoherenceReport
from .correlation import (
    condensate_correlation,
    correlation_direct,
    correlation_profile,
    correlation_theta,
    limiting_profile,
)
from .odlro import CoherenceSettings, coherence_length, odlro_profile, path_limit
