import warnings
from typing import List, Literal, Optional, Tuple, Union
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.errors import InvalidParameterValueError
from app.warnings import IntervalCountWarning

SUBCOMMANDS = ("fit", "select", "estimate-r", "simulate", "bench")

# subcommand -> (pipeline group under services.pipelines, runner name)
RUNNERS = {
    "fit": ("survival_analysis", "fit_from_csv"),
    "select": ("survival_analysis", "select_from_csv"),
    "estimate-r": ("survival_analysis", "estimate_r_from_csv"),
    "simulate": ("simulation_benchmark", "simulate_to_csv"),
    "bench": ("simulation_benchmark", "bench_to_csv"),
}

_FIT_OPTIONS = ("intervals", "penalty", "gamma", "pi", "seed", "max_em", "max_mstep", "burnin", "threads",
                "random_columns")
_SIM_OPTIONS = ("sim_preset", "n", "k", "p", "beta", "seed")

RUNNER_PARAMS = {
    "fit": ("input", "output", "r", "lambda0", "lambda1", *_FIT_OPTIONS),
    "select": ("input", "output", "r", "n_lambda", *_FIT_OPTIONS),
    "estimate-r": ("input", "output", *_FIT_OPTIONS),
    "simulate": ("output", *_SIM_OPTIONS),
    "bench": ("output", "replicates", "r", "n_lambda", *_SIM_OPTIONS, *_FIT_OPTIONS),
}


class RunConfig(BaseModel):
    """
    Fully resolved command-line request. Its JSON dump is embedded in every output so a run can be repeated.
    """
    model_config = ConfigDict(frozen=True)

    subcommand: str
    input: Optional[str] = None
    output: Optional[str] = None
    env: str = "PROD"
    intervals: int = 8
    penalty: str = "mcp"
    gamma: Optional[float] = None
    pi: float = 1.0
    r: Union[Literal["auto"], int] = "auto"
    n_lambda: int = 10
    seed: int = 20240101
    max_em: int = 25
    max_mstep: int = 50
    burnin: int = 250
    threads: int = 1
    lambda0: Optional[float] = None
    lambda1: Optional[float] = None
    random_columns: Optional[List[int]] = None
    replicates: int = 1
    sim_preset: str = "moderate"
    n: Optional[int] = None
    k: Optional[int] = None
    p: Optional[int] = None
    beta: Optional[float] = None
    verbosity: str = "INFO"

    @field_validator("r", mode="before")
    @classmethod
    def parse_r(cls, value):
        if isinstance(value, str) and value != "auto":
            try:
                return int(value)
            except ValueError:
                raise InvalidParameterValueError(f"r must be 'auto' or a positive integer, got '{value}'.")
        return value

    @model_validator(mode="after")
    def check_ranges(self):
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidParameterValueError(
                f"Unknown subcommand '{self.subcommand}'. Expected one of: {list(SUBCOMMANDS)}."
            )
        if not 2 <= self.intervals <= 50:
            raise InvalidParameterValueError(f"The interval count must lie in [2, 50], got {self.intervals}.")
        if not 5 <= self.intervals <= 10:
            warnings.warn(IntervalCountWarning(self.intervals), stacklevel=2)
        if self.r != "auto" and self.r < 1:
            raise InvalidParameterValueError(f"An explicit r must be at least 1, got {self.r}.")
        if self.n_lambda < 2:
            raise InvalidParameterValueError(f"n_lambda must be at least 2, got {self.n_lambda}.")
        if min(self.max_em, self.max_mstep, self.threads, self.replicates) < 1 or self.burnin < 0:
            raise InvalidParameterValueError("Iteration caps, threads and replicates must be positive.")
        for name in ("lambda0", "lambda1"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InvalidParameterValueError(f"{name} must be nonnegative, got {value}.")
        if self.subcommand in ("fit", "select", "estimate-r") and not self.input:
            raise InvalidParameterValueError(f"'{self.subcommand}' needs an --input CSV.")
        if self.subcommand in ("simulate", "bench") and self.sim_preset not in ("small", "moderate"):
            raise InvalidParameterValueError(f"Unknown simulation preset '{self.sim_preset}'.")
        return self

    @property
    def runner(self) -> Tuple[str, str]:
        return RUNNERS[self.subcommand]

    def runner_params(self) -> dict:
        """Keyword arguments of the subcommand's runner, in JSON form."""
        dump = self.model_dump(mode="json")
        return {name: dump[name] for name in dict.fromkeys(RUNNER_PARAMS[self.subcommand])}
