from functools import lru_cache

import numpy as np

from models.configs import PenaltyConfig
from services.penalties.base import Penalty
from services.penalties.implementations import LassoPenalty, MCPPenalty, SCADPenalty

PENALTIES = {
    "lasso": LassoPenalty,
    "mcp": MCPPenalty,
    "scad": SCADPenalty,
}


@lru_cache(maxsize=None)
def _build(kind: str, gamma, pi: float) -> Penalty:
    if kind == "lasso":
        return LassoPenalty(pi=pi)
    return PENALTIES[kind](gamma=gamma, pi=pi)


def get_penalty(cfg: PenaltyConfig) -> Penalty:
    """Penalty instance for a configuration; instances are immutable and shared."""
    return _build(cfg.kind, cfg.gamma, cfg.pi)


def penalty_value(cfg: PenaltyConfig, t, lam: float):
    return get_penalty(cfg).value(t, lam)


def prox_scalar(cfg: PenaltyConfig, z: float, step: float, lam: float) -> float:
    return get_penalty(cfg).prox(z, step, lam)


def prox_group(cfg: PenaltyConfig, z, step: float, lam: float) -> np.ndarray:
    return get_penalty(cfg).prox_group(z, step, lam)


def lambda_max_scale(cfg: PenaltyConfig) -> float:
    """Factor linking a score at the origin to the penalty level that keeps it at zero."""
    return get_penalty(cfg).zero_threshold(1.0)
