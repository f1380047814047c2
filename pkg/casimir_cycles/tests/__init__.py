from . import test_spectrum
from . import test_window_law
from . import test_densities
from . import test_hierarchy
