from typing import List, Optional, Union

from app.errors import InvalidParameterValueError
from models.configs import FitConfig


def resolve_fit_config(env: str, intervals: Optional[int], penalty: str, gamma: Optional[float], pi: float,
                       seed: Optional[int], max_em: Optional[int], max_mstep: Optional[int], burnin: Optional[int],
                       threads: Optional[int], random_columns: Optional[List[int]]) -> FitConfig:
    return FitConfig.from_options(env=env, intervals=intervals, penalty=penalty, gamma=gamma, pi=pi, seed=seed,
                                  max_em=max_em, max_mstep=max_mstep, burnin=burnin, threads=threads,
                                  random_columns=random_columns)


def check_env(env: str):
    if env not in ["DEV", "TEST", "PROD"]:
        raise InvalidParameterValueError("Invalid environment. Choose from: DEV, TEST, PROD.")


def check_r(r: Union[str, int]) -> Union[str, int]:
    if r == "auto":
        return r
    try:
        r = int(r)
    except (TypeError, ValueError):
        raise InvalidParameterValueError(f"r must be 'auto' or a positive integer, got {r!r}.")
    if r < 1:
        raise InvalidParameterValueError(f"An explicit r must be at least 1, got {r}.")
    return r
