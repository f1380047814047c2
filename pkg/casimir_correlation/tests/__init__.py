from . import test_correlation
from . import test_profile
from . import test_odlro
from . import test_coherence
