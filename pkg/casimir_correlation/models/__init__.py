from . import separation_path
from . import correlation_profile
from . import coherence_report
