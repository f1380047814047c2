from . import regime
from . import scale_function
from . import reports
