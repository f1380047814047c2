from . import scaling_series
