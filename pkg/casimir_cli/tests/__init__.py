from . import test_config
from . import test_commands
from . import test_cli
