from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GrowthRatioResult:
    """Eigen diagnostics of the Growth Ratio estimate of the latent factor count."""
    eigenvalues: np.ndarray
    tail_sums: np.ndarray
    ratios: np.ndarray
    max_factors: int
    r_hat: int

    def summary(self) -> dict:
        return {
            "eigenvalues": self.eigenvalues,
            "V": self.tail_sums,
            "GR": self.ratios,
            "U": self.max_factors,
            "r_hat": self.r_hat,
        }
