from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class PseudoEffectsMatrix:
    """
    q x K matrix G of group-specific coefficient estimates (intercept first), centered across groups.
    """
    G: np.ndarray
    groups: Tuple = ()
    fallback_groups: Tuple = ()

    @property
    def q(self) -> int:
        return int(self.G.shape[0])

    @property
    def n_groups(self) -> int:
        return int(self.G.shape[1])

    @classmethod
    def from_estimates(cls, estimates: np.ndarray, groups=(), fallback_groups=()) -> "PseudoEffectsMatrix":
        """Centers each row of a q x K estimate matrix."""
        estimates = np.asarray(estimates, dtype=np.float64)
        return cls(estimates - estimates.mean(axis=1, keepdims=True), tuple(groups), tuple(fallback_groups))
