from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.errors import DimensionMismatchError


@dataclass(frozen=True)
class GroupChain:
    """
    Retained draws of one group's latent factors and the chain state to resume from.

    Attributes:
    ----------
    draws : np.ndarray
        M x r retained draws of alpha_k.
    acceptance : np.ndarray
        Per-coordinate acceptance rate over the retained draws.
    log_scales : np.ndarray
        Per-coordinate log proposal scales after adaptation.
    adapt_batches : int
        Adaptation batches run so far; the adaptation gain decays with it across E-steps.
    """
    draws: np.ndarray
    acceptance: np.ndarray
    log_scales: np.ndarray
    adapt_batches: int = 0

    @property
    def last(self) -> np.ndarray:
        return self.draws[-1]

    @property
    def mean(self) -> np.ndarray:
        return self.draws.mean(axis=0)

    @property
    def variance(self) -> np.ndarray:
        return self.draws.var(axis=0)


@dataclass(frozen=True)
class PosteriorSamples:
    """
    E-step output: one chain per group code, in group-code order. ``chains[k]`` is None for codes
    absent from the data (group-specific subsets).
    """
    chains: Tuple[Optional[GroupChain], ...]

    def __post_init__(self):
        shapes = {chain.draws.shape for chain in self.chains if chain is not None}
        if len(shapes) > 1:
            raise DimensionMismatchError(f"All groups must share the same M x r draw shape, got {shapes}.")
        for chain in self.chains:
            if chain is not None and not np.all(np.isfinite(chain.draws)):
                raise DimensionMismatchError("Posterior draws must be finite.")

    @property
    def n_draws(self) -> int:
        return next(chain.draws.shape[0] for chain in self.chains if chain is not None)

    @property
    def n_factors(self) -> int:
        return next(chain.draws.shape[1] for chain in self.chains if chain is not None)

    def draws(self, group: int) -> np.ndarray:
        return self.chains[group].draws

    def means(self) -> np.ndarray:
        return np.array([chain.mean if chain is not None else np.full(self.n_factors, np.nan)
                         for chain in self.chains])

    def acceptance_rates(self) -> np.ndarray:
        return np.array([chain.acceptance if chain is not None else np.full(self.n_factors, np.nan)
                         for chain in self.chains])

    def diagnostics(self) -> dict:
        return {
            "n_draws": self.n_draws,
            "mean": self.means(),
            "variance": [chain.variance if chain is not None else None for chain in self.chains],
            "acceptance": self.acceptance_rates(),
        }
