from typing import Optional, Tuple
import logging

import numpy as np

from app.errors import DegenerateGradientError, InvalidParameterValueError
from models.configs import FitConfig, PenaltyConfig
from models.params import ModelParams
from models.survival import DesignMatrices
from services.engine import closed_form_baseline, init_fixed_effects, init_theta
from services.optimizers import QFunction
from services.penalties import lambda_max_scale
from services.samplers import AdaptiveRandomWalkSampler, run_estep

logger = logging.getLogger(__name__)

# Scores below this count as zero when building a grid
GRADIENT_FLOOR = 1e-12


def log_sequence(lambda_max: float, n_lambda: int, min_ratio: float) -> np.ndarray:
    """n_lambda log-equispaced values from min_ratio * lambda_max to lambda_max, ascending."""
    if n_lambda < 2:
        raise InvalidParameterValueError(f"n_lambda must be at least 2, got {n_lambda}.")
    if not 0 < min_ratio < 1:
        raise InvalidParameterValueError(f"min_ratio must lie in (0, 1), got {min_ratio}.")
    return np.exp(np.linspace(np.log(min_ratio * lambda_max), np.log(lambda_max), n_lambda))


def lambda0_max(design: DesignMatrices, cfg: PenaltyConfig) -> float:
    """
    Smallest lambda0 keeping every beta at zero: max_l |dQ1/dbeta_l| / (N pi) at the intercept-only fit.
    """
    if design.p == 0:
        raise DegenerateGradientError("There are no fixed effects to penalize.")
    params = ModelParams(closed_form_baseline(design), np.zeros(design.p), np.zeros((design.q, 1)))
    _, grad_beta, _ = QFunction(design, None).gradient(params)
    value = float(np.max(np.abs(grad_beta))) / (design.n_subjects * lambda_max_scale(cfg))
    if not value > GRADIENT_FLOOR:
        raise DegenerateGradientError("All fixed-effect scores vanish at the intercept-only fit.")
    return value


def lambda1_max(design: DesignMatrices, cfg: FitConfig, r: int, lambda0: float,
                stream: Tuple[int, ...] = (0,)) -> float:
    """
    Largest group score max_t ||dQ1/db_t|| / (N pi) at the screened initialization, each row
    evaluated with that row set to zero, under one E-step drawn at the initialization.
    """
    psi_tilde, beta = init_fixed_effects(design, lambda0, cfg.penalty, cfg)
    params = init_theta(psi_tilde, beta, r, design.q, cfg.screen, design.random_columns)
    sampler = AdaptiveRandomWalkSampler(target_accept=cfg.target_accept, adapt_batch=cfg.adapt_batch)
    samples = run_estep(design, params, cfg.sample_size(1), cfg.burnin, cfg.seed, stream=stream,
                        sampler=sampler, num_threads=cfg.num_threads)
    q_function = QFunction(design, samples)

    rows = range(design.q) if cfg.penalize_random_intercept else range(1, design.q)
    nonzero = set(params.selected_random())
    base = q_function.gradient(params)[2]
    scores = []
    for t in rows:
        if t in nonzero:
            zeroed = params.copy()
            zeroed.loadings[t] = 0.0
            scores.append(float(np.linalg.norm(q_function.gradient(zeroed)[2][t])))
        else:
            scores.append(float(np.linalg.norm(base[t])))
    value = max(scores, default=0.0) / (design.n_subjects * lambda_max_scale(cfg.penalty))
    if not value > GRADIENT_FLOOR:
        raise DegenerateGradientError("All loading-row scores vanish at the initialization.")
    return value


def lambda_grid(design: DesignMatrices, cfg: FitConfig, n_lambda: int, r: int, min_ratio: float = 0.05,
                stream: Optional[Tuple[int, ...]] = (0,)) -> Tuple[np.ndarray, np.ndarray]:
    """Ascending (lambda0, lambda1) sequences; lambda1 scores are taken at the smallest lambda0."""
    lambda0_seq = log_sequence(lambda0_max(design, cfg.penalty), n_lambda, min_ratio)
    lambda1_seq = log_sequence(lambda1_max(design, cfg, r, lambda0_seq[0], stream), n_lambda, min_ratio)
    logger.info(f"lambda0 in [{lambda0_seq[0]:.4g}, {lambda0_seq[-1]:.4g}], "
                f"lambda1 in [{lambda1_seq[0]:.4g}, {lambda1_seq[-1]:.4g}] ({n_lambda} values each)")
    return lambda0_seq, lambda1_seq
