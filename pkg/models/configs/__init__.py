from .penalty_config import PenaltyConfig
from .fit_config import FitConfig
from .sim_config import SimConfig, block_loadings
from .run_config import RunConfig, SUBCOMMANDS, RUNNERS, RUNNER_PARAMS
