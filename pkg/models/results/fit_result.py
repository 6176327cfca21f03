from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from models.params import ModelParams, PosteriorSamples
from models.survival import IntervalGrid, SurvivalDataset


@dataclass
class FitResult:
    """
    Outcome of one MCECM fit at a (lambda0, lambda1) pair.

    Attributes:
    ----------
    params : ModelParams
        Final estimates on the standardized covariate scale.
    q1_at_solution : float
        Q1 at ``params`` under ``samples_final``.
    samples_final : PosteriorSamples
        Posterior draws of the last E-step.
    em_iterations : int
        EM iterations used.
    converged : bool
        Whether the EM convergence rule held before the iteration cap.
    objective : float
        Final penalized objective Q1 / N + penalties of the last M-step.
    """
    params: ModelParams
    q1_at_solution: float
    samples_final: PosteriorSamples
    em_iterations: int
    converged: bool
    lambda0: float
    lambda1: float
    step_size: float
    objective: float
    grid: IntervalGrid
    random_columns: Tuple[int, ...] = ()

    @property
    def sigma_hat(self) -> np.ndarray:
        return self.params.sigma

    @property
    def selected_fixed(self) -> List[int]:
        return self.params.selected_fixed()

    @property
    def selected_random(self) -> List[int]:
        """Selected loading rows; 0 is the random intercept, row t > 0 is predictor random_columns[t - 1]."""
        return self.params.selected_random()

    def selected_random_predictors(self) -> List[int]:
        return [self.random_columns[t - 1] for t in self.selected_random if t > 0]

    def risk_scores(self, data: SurvivalDataset) -> np.ndarray:
        """Fixed-effects linear predictor x^T beta per subject (covariates on the fitted scale)."""
        return data.covariates @ self.params.beta

    def summary(self, data: Optional[SurvivalDataset] = None) -> dict:
        """Reporting view; with ``data`` the coefficients are also given on the original covariate scale."""
        beta = self.params.beta
        payload = {
            "lambda0": self.lambda0,
            "lambda1": self.lambda1,
            "psi_tilde": self.params.psi_tilde,
            "beta_standardized": beta,
            "B": self.params.loadings,
            "Sigma": self.sigma_hat,
            "selected_fixed": self.selected_fixed,
            "selected_random": self.selected_random,
            "random_columns": list(self.random_columns),
            "q1": self.q1_at_solution,
            "objective": self.objective,
            "em_iterations": self.em_iterations,
            "converged": self.converged,
            "cutpoints": self.grid.to_list(),
        }
        if data is not None:
            original = data.destandardize_coefficients(beta)
            payload["beta_original_scale"] = original
            payload["hazard_ratio_original_scale"] = np.exp(original)
            payload["psi_tilde_original_scale"] = np.concatenate(
                ([self.params.psi_tilde[0] + data.baseline_shift(beta)], self.params.psi_tilde[1:])
            )
            payload["covariate_names"] = list(data.covariate_names)
        return payload
