from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from models.params import PosteriorSamples
from models.results.fit_result import FitResult


@dataclass
class PathEntry:
    """One visited (lambda0, lambda1) pair of the two-stage search."""
    stage: int
    lambda0: float
    lambda1: float
    bic_icq: float
    fit: FitResult

    def summary(self) -> dict:
        return {
            "stage": self.stage,
            "lambda0": self.lambda0,
            "lambda1": self.lambda1,
            "bic_icq": self.bic_icq,
            "selected_fixed": self.fit.selected_fixed,
            "selected_random": self.fit.selected_random,
            "em_iterations": self.fit.em_iterations,
            "converged": self.fit.converged,
        }


@dataclass
class SelectionPath:
    """
    Fits of the two-stage search in visit order. Stage 1 holds lambda0 at its minimum and
    walks lambda1 upwards; stage 2 holds lambda1 at its BIC-ICQ optimum and walks lambda0 upwards.
    """
    lambda0_grid: np.ndarray
    lambda1_grid: np.ndarray
    entries: List[PathEntry] = field(default_factory=list)
    reference_samples: Optional[PosteriorSamples] = None
    lambda1_opt: Optional[float] = None
    best_index: Optional[int] = None

    def stage(self, stage: int) -> List[PathEntry]:
        return [entry for entry in self.entries if entry.stage == stage]

    @property
    def best(self) -> PathEntry:
        return self.entries[self.best_index]

    def summary(self) -> dict:
        return {
            "lambda0_grid": self.lambda0_grid,
            "lambda1_grid": self.lambda1_grid,
            "lambda1_opt": self.lambda1_opt,
            "best_index": self.best_index,
            "path": [entry.summary() for entry in self.entries],
        }
