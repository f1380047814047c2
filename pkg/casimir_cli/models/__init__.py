from . import experiment_config
