from . import test_polylog
from . import test_theta
from . import test_lattice_sums
from . import test_series_result
