from . import test_geometry
from . import test_spectrum
from . import test_density
from . import test_solver
from . import test_bulk
