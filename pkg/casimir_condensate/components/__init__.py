from . import base
from . import constants
from . import profile
