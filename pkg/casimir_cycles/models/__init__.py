from . import cycle_spectrum
from . import cycle_window
from . import hierarchy_report
