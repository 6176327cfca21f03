from dataclasses import dataclass
from typing import List

import numpy as np

from app.errors import DimensionMismatchError, InvalidParameterValueError


@dataclass
class ModelParams:
    """
    Parameters theta = (psi_tilde, beta, B) of the piecewise constant hazard mixed-effects model.

    Attributes:
    ----------
    psi_tilde : np.ndarray
        J log baseline-hazard terms: psi_1 = psi_tilde_1 and psi_j = psi_tilde_1 + psi_tilde_j for j > 1.
    beta : np.ndarray
        p fixed-effect log hazard ratios.
    loadings : np.ndarray
        q x r loading matrix B; row 0 is the random intercept, gamma_k = B alpha_k.
    """
    psi_tilde: np.ndarray
    beta: np.ndarray
    loadings: np.ndarray

    def __post_init__(self):
        self.psi_tilde = np.array(self.psi_tilde, dtype=np.float64).reshape(-1)
        self.beta = np.array(self.beta, dtype=np.float64).reshape(-1)
        self.loadings = np.array(self.loadings, dtype=np.float64)
        if self.loadings.ndim != 2:
            raise DimensionMismatchError(f"Loadings must be a q x r matrix, got shape {self.loadings.shape}.")
        if self.loadings.shape[0] < 1 or self.loadings.shape[1] < 1:
            raise InvalidParameterValueError("Loadings need q >= 1 rows and r >= 1 columns.")
        if self.psi_tilde.size < 1:
            raise InvalidParameterValueError("At least one baseline hazard term is required.")

    @property
    def n_intervals(self) -> int:
        return int(self.psi_tilde.size)

    @property
    def p(self) -> int:
        return int(self.beta.size)

    @property
    def q(self) -> int:
        return int(self.loadings.shape[0])

    @property
    def r(self) -> int:
        return int(self.loadings.shape[1])

    @property
    def psi(self) -> np.ndarray:
        """Log baseline hazard per interval."""
        psi = self.psi_tilde + self.psi_tilde[0]
        psi[0] = self.psi_tilde[0]
        return psi

    @property
    def sigma(self) -> np.ndarray:
        """Random-effects covariance B B^T."""
        return self.loadings @ self.loadings.T

    def selected_fixed(self) -> List[int]:
        return [int(j) for j in np.flatnonzero(self.beta)]

    def selected_random(self) -> List[int]:
        return [int(t) for t in np.flatnonzero(np.any(self.loadings != 0, axis=1))]

    def copy(self) -> "ModelParams":
        return ModelParams(self.psi_tilde.copy(), self.beta.copy(), self.loadings.copy())

    def check_dimensions(self, n_intervals: int, p: int, q: int):
        if (self.n_intervals, self.p, self.q) != (n_intervals, p, q):
            raise DimensionMismatchError(
                f"Parameters have (J, p, q) = {(self.n_intervals, self.p, self.q)}, "
                f"data need {(n_intervals, p, q)}."
            )

    def max_change(self, other: "ModelParams") -> float:
        """Largest absolute change over coordinates nonzero in either parameter set."""
        diffs = []
        for mine, theirs in ((self.psi_tilde, other.psi_tilde), (self.beta, other.beta),
                             (self.loadings, other.loadings)):
            active = (mine != 0) | (theirs != 0)
            if np.any(active):
                diffs.append(float(np.max(np.abs(mine[active] - theirs[active]))))
        return max(diffs, default=0.0)

    def to_dict(self) -> dict:
        return {
            "psi_tilde": self.psi_tilde.tolist(),
            "beta": self.beta.tolist(),
            "loadings": self.loadings.tolist(),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "ModelParams":
        return cls(payload["psi_tilde"], payload["beta"], payload["loadings"])
