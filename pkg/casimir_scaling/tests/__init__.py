from . import test_fitting
from . import test_sweep
from . import test_hypothesis
