from . import models
from .exceptions import ConfigError
from .models.experiment_config import ExperimentConfig
from .config import load_config
from .commands import COMMANDS, cmd_classify, cmd_correlate, cmd_cycles, cmd_solve_mu
from .output import read_table, write_report
from .cli import main
