import numpy as np

from app.errors import DimensionMismatchError
from models.params import ModelParams
from models.survival import DesignMatrices


class GroupPosterior:
    """
    Unnormalized log posterior of one group's latent factors alpha_k:

        sum_rows [d (eta + z^T B alpha) - exp(eta + z^T B alpha)] - ||alpha||^2 / 2

    with eta = offset + v^T psi_tilde + x^T beta fixed for the group.
    """

    def __init__(self, design: DesignMatrices, group: int, params: ModelParams):
        params.check_dimensions(design.n_intervals, design.p, design.q)
        rows = design.group_rows[group]
        self.group = group
        self.death = design.death[rows]
        self.eta = design.fixed_predictor(params.psi_tilde, params.beta)[rows]
        self.loaded = design.random[rows] @ params.loadings
        self.r = params.r

    def linear_predictor(self, alpha: np.ndarray) -> np.ndarray:
        return self.eta + self.loaded @ alpha

    def log_density_from_predictor(self, predictor: np.ndarray, alpha: np.ndarray) -> float:
        with np.errstate(over="ignore"):
            return float(self.death @ predictor - np.sum(np.exp(predictor)) - 0.5 * alpha @ alpha)

    def log_density(self, alpha) -> float:
        alpha = self._check(alpha)
        return self.log_density_from_predictor(self.linear_predictor(alpha), alpha)

    def gradient(self, alpha) -> np.ndarray:
        alpha = self._check(alpha)
        mu = np.exp(self.linear_predictor(alpha))
        return self.loaded.T @ (self.death - mu) - alpha

    def _check(self, alpha) -> np.ndarray:
        alpha = np.asarray(alpha, dtype=np.float64).reshape(-1)
        if alpha.size != self.r:
            raise DimensionMismatchError(f"alpha has {alpha.size} entries, the loadings have {self.r} columns.")
        return alpha


def log_posterior_alpha(alpha, design: DesignMatrices, group: int, params: ModelParams) -> float:
    """Log posterior of alpha_k up to an additive constant."""
    return GroupPosterior(design, group, params).log_density(alpha)
