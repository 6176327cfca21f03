from typing import List, Optional
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from app.errors import InvalidParameterValueError
from app.utils import ConfigLoader


def block_loadings(eigenvalues, n_rows: int, q: int) -> np.ndarray:
    """
    Loading matrix whose first ``n_rows`` rows split into ``r`` contiguous blocks, column m
    constant on block m. Columns are orthogonal, so B B^T has exactly ``eigenvalues`` as spectrum.
    """
    eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
    r = eigenvalues.size
    if r < 1 or n_rows < r or n_rows > q:
        raise InvalidParameterValueError(f"Cannot place {r} factor blocks on {n_rows} of {q} rows.")
    if np.any(eigenvalues < 0):
        raise InvalidParameterValueError("Loading spectrum must be nonnegative.")
    loadings = np.zeros((q, r))
    for m, block in enumerate(np.array_split(np.arange(n_rows), r)):
        loadings[block, m] = np.sqrt(eigenvalues[m] / block.size)
    return loadings


class SimConfig(BaseModel):
    """
    Generative set-up of a simulated piecewise constant hazard mixed-effects dataset.

    ``loadings`` is the (p+1) x r true loading matrix with the intercept as first row.
    """
    model_config = ConfigDict(frozen=True)

    n_subjects: int
    n_groups: int
    n_predictors: int
    beta_true: List[float]
    loadings: List[List[float]]
    psi_star: List[float]
    sim_cutpoints: List[float]
    censor_max: float = 5.0
    seed: int = 20240101

    @model_validator(mode="after")
    def check_dimensions(self):
        if self.n_subjects < 2 or self.n_groups < 2 or self.n_predictors < 1:
            raise InvalidParameterValueError("Simulation needs N >= 2, K >= 2 and p >= 1.")
        if self.n_groups > self.n_subjects:
            raise InvalidParameterValueError("Every group needs at least one subject.")
        if len(self.beta_true) != self.n_predictors:
            raise InvalidParameterValueError(
                f"beta_true has {len(self.beta_true)} entries for {self.n_predictors} predictors."
            )
        if len(self.loadings) != self.n_predictors + 1 or len({len(row) for row in self.loadings}) != 1:
            raise InvalidParameterValueError("loadings must be a (p+1) x r matrix.")
        if len(self.psi_star) != len(self.sim_cutpoints) + 1:
            raise InvalidParameterValueError("psi_star needs one log hazard per simulation interval.")
        if any(b <= a for a, b in zip([0.0] + list(self.sim_cutpoints), self.sim_cutpoints)):
            raise InvalidParameterValueError("Simulation cut points must be positive and strictly increasing.")
        if not self.censor_max > 0:
            raise InvalidParameterValueError(f"censor_max must be positive, got {self.censor_max}.")
        return self

    @classmethod
    def from_preset(cls, n_subjects: int = None, n_groups: int = None, n_predictors: int = None,
                    beta_value: float = None, loading_preset: str = None, n_true: int = None,
                    seed: int = 20240101, presets_path: Optional[str] = None) -> "SimConfig":
        """
        Builds a configuration from ``config/presets.yaml``: the first ``n_true`` predictors carry
        ``beta_value`` and random effects together with the intercept, other arguments override the preset.
        """
        preset = ConfigLoader.load_section("simulation", presets_path)
        spectra = ConfigLoader.load_section("loading_presets", presets_path)
        n_predictors = n_predictors or preset["n_predictors"]
        n_true = min(n_true or preset["n_true"], n_predictors)
        beta_value = preset["beta_value"] if beta_value is None else beta_value
        loading_preset = loading_preset or preset["loading_preset"]
        if loading_preset not in spectra:
            raise InvalidParameterValueError(
                f"Unknown loading preset '{loading_preset}'. Expected one of: {list(spectra)}."
            )
        beta = [float(beta_value)] * n_true + [0.0] * (n_predictors - n_true)
        loadings = block_loadings(spectra[loading_preset], n_true + 1, n_predictors + 1)
        return cls(
            n_subjects=n_subjects or preset["n_subjects"],
            n_groups=n_groups or preset["n_groups"],
            n_predictors=n_predictors,
            beta_true=beta,
            loadings=loadings.tolist(),
            psi_star=preset["psi_star"],
            sim_cutpoints=preset["cutpoints"],
            censor_max=preset["censor_max"],
            seed=seed,
        )

    @classmethod
    def reference_default(cls, seed: int = 20240101) -> "SimConfig":
        """N=1000, K=5, p=100, beta=1 on the first 5 predictors, moderate loadings (r=3)."""
        return cls.from_preset(seed=seed)

    @property
    def n_factors(self) -> int:
        return len(self.loadings[0])

    def beta_array(self) -> np.ndarray:
        return np.asarray(self.beta_true, dtype=np.float64)

    def loading_matrix(self) -> np.ndarray:
        return np.asarray(self.loadings, dtype=np.float64)

    def sigma_true(self) -> np.ndarray:
        loadings = self.loading_matrix()
        return loadings @ loadings.T

    def true_fixed(self) -> List[int]:
        return [int(j) for j in np.flatnonzero(self.beta_array())]

    def true_random(self) -> List[int]:
        """Row indices of nonzero loading rows, 0 being the random intercept."""
        return [int(t) for t in np.flatnonzero(np.linalg.norm(self.loading_matrix(), axis=1))]
