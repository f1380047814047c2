from . import series_result
