from . import test_critical
from . import test_components
from . import test_scaled
from . import test_classify
from . import test_fragmentation
from . import test_asymptotics
