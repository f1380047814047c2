from . import box_geometry
from . import thermo_point
from . import occupation_spectrum
