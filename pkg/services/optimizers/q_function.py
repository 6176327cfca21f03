from typing import List, Optional, Tuple

import numpy as np
from scipy.stats import norm

from app.errors import DimensionMismatchError
from models.configs import PenaltyConfig
from models.params import ModelParams, PosteriorSamples
from models.survival import DesignMatrices
from services.penalties import get_penalty


class QFunction:
    """
    Monte Carlo approximation of the expected complete-data negative log-likelihood

        Q1(theta) = -(1/M) sum_m sum_rows [d log mu_m - mu_m],
        log mu_m = offset + v^T psi_tilde + x^T beta + z^T B alpha_m,

    under fixed posterior samples. Without samples the random part is dropped (fixed-effects model).
    """

    def __init__(self, design: DesignMatrices, samples: Optional[PosteriorSamples] = None):
        self.design = design
        self.samples = samples
        if samples is not None:
            missing = [k for k in design.present_groups()
                       if k >= len(samples.chains) or samples.chains[k] is None]
            if missing:
                raise DimensionMismatchError(f"No posterior draws for groups {missing}.")

    def check_params(self, params: ModelParams):
        params.check_dimensions(self.design.n_intervals, self.design.p, self.design.q)
        if self.samples is not None and params.r != self.samples.n_factors:
            raise DimensionMismatchError(
                f"Loadings have r = {params.r}, posterior draws have {self.samples.n_factors} columns."
            )

    def _random_parts(self, loadings: np.ndarray) -> List[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """Per present group: (rows, draws A_k, U_k = Z_k B A_k^T)."""
        parts = []
        for k in self.design.present_groups():
            rows = self.design.group_rows[k]
            draws = self.samples.draws(k)
            parts.append((rows, draws, self.design.random[rows] @ loadings @ draws.T))
        return parts

    def reductions(self, params: ModelParams) -> Tuple[np.ndarray, np.ndarray]:
        """Row-wise mean_m exp(z^T B alpha_m) and mean_m z^T B alpha_m."""
        n = self.design.long_form.n_rows
        weight, shift = np.ones(n), np.zeros(n)
        if self.samples is None:
            return weight, shift
        with np.errstate(over="ignore"):
            for rows, _, random_part in self._random_parts(params.loadings):
                weight[rows] = np.exp(random_part).mean(axis=1)
                shift[rows] = random_part.mean(axis=1)
        return weight, shift

    def value(self, params: ModelParams) -> float:
        self.check_params(params)
        fixed = self.design.fixed_predictor(params.psi_tilde, params.beta)
        weight, shift = self.reductions(params)
        with np.errstate(over="ignore", invalid="ignore"):
            return float(-np.sum(self.design.death * (fixed + shift) - np.exp(fixed) * weight))

    def gradient(self, params: ModelParams) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Gradients of Q1 with respect to psi_tilde, beta and B."""
        self.check_params(params)
        fixed = self.design.fixed_predictor(params.psi_tilde, params.beta)
        weight, _ = self.reductions(params)
        residual = self.design.death - np.exp(fixed) * weight
        grad_psi = -self.design.dummies.T @ residual
        grad_beta = -self.design.covariates.T @ residual
        grad_loadings = np.zeros_like(params.loadings)
        if self.samples is not None:
            for rows, draws, random_part in self._random_parts(params.loadings):
                mean = np.exp(fixed[rows])[:, None] * np.exp(random_part)
                weighted = (self.design.death[rows][:, None] - mean) @ draws
                grad_loadings -= self.design.random[rows].T @ weighted / draws.shape[0]
        return grad_psi, grad_beta, grad_loadings

    def penalty(self, params: ModelParams, lambda0: float, lambda1: float, cfg: PenaltyConfig,
                penalize_random_intercept: bool = True) -> float:
        penalty = get_penalty(cfg)
        total = float(np.sum(penalty.value(np.abs(params.beta), lambda0))) if params.p else 0.0
        norms = np.linalg.norm(params.loadings, axis=1)
        if not penalize_random_intercept:
            norms = norms[1:]
        return total + float(np.sum(penalty.value(norms, lambda1)))

    def penalized_objective(self, params: ModelParams, lambda0: float, lambda1: float, cfg: PenaltyConfig,
                            penalize_random_intercept: bool = True) -> float:
        """Q1 / N plus the fixed and grouped penalties, N being the number of subjects."""
        return self.value(params) / self.design.n_subjects + \
            self.penalty(params, lambda0, lambda1, cfg, penalize_random_intercept)


def q1_value(params: ModelParams, samples: Optional[PosteriorSamples], design: DesignMatrices) -> float:
    return QFunction(design, samples).value(params)


def q2_value(samples: PosteriorSamples) -> float:
    """-(1/M) sum_k sum_m log phi(alpha_k^(m)) with phi the standard normal density."""
    total = 0.0
    for chain in samples.chains:
        if chain is not None:
            total -= float(np.sum(norm.logpdf(chain.draws))) / chain.draws.shape[0]
    return total
