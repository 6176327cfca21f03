from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from models.survival.long_form_dataset import LongFormDataset


@dataclass(frozen=True)
class DesignMatrices:
    """
    Row-level arrays of the Poisson log-linear model
    log mu = offset + v^T psi_tilde + x^T beta + z^T B alpha_k, shared by the sampler and the optimizer.
    """
    long_form: LongFormDataset
    random_columns: Optional[Sequence[int]] = None

    def __post_init__(self):
        columns = tuple(self.long_form.resolve_random_columns(self.random_columns))
        object.__setattr__(self, "random_columns", columns)

    @property
    def n_subjects(self) -> int:
        return self.long_form.n_subjects

    @property
    def n_intervals(self) -> int:
        return self.long_form.n_intervals

    @property
    def p(self) -> int:
        return self.long_form.source.n_predictors

    @property
    def q(self) -> int:
        return 1 + len(self.random_columns)

    @property
    def n_group_codes(self) -> int:
        return len(self.long_form.group_rows)

    @cached_property
    def offset(self) -> np.ndarray:
        return self.long_form.offset

    @cached_property
    def death(self) -> np.ndarray:
        return self.long_form.death.astype(np.float64)

    @cached_property
    def dummies(self) -> np.ndarray:
        return self.long_form.interval_dummies

    @cached_property
    def covariates(self) -> np.ndarray:
        return self.long_form.covariates

    @cached_property
    def random(self) -> np.ndarray:
        return self.long_form.random_design(self.random_columns)

    @cached_property
    def group_rows(self) -> List[np.ndarray]:
        return self.long_form.group_rows

    def present_groups(self) -> List[int]:
        return self.long_form.present_groups()

    def fixed_predictor(self, psi_tilde: np.ndarray, beta: np.ndarray) -> np.ndarray:
        """offset + V psi_tilde + X beta per row."""
        eta = self.offset + self.dummies @ psi_tilde
        if beta.size:
            eta = eta + self.covariates @ beta
        return eta
