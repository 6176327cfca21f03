from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from app.errors import NonFiniteLogPosteriorError, InvalidParameterValueError
from models.params import GroupChain
from services.samplers.base import PosteriorSampler
from services.samplers.implementations.group_posterior import GroupPosterior


@dataclass
class AdaptiveRandomWalkSampler(PosteriorSampler):
    """
    Random-walk Metropolis-within-Gibbs over the coordinates of alpha_k.

    During burn-in each coordinate's log proposal scale moves by (acceptance - target) / sqrt(batch)
    after every batch of ``adapt_batch`` sweeps; it is frozen for the retained draws.

    Attributes:
    ----------
    target_accept : float
        Per-coordinate acceptance rate the adaptation aims at.
    adapt_batch : int
        Sweeps per adaptation batch.
    """
    target_accept: float = 0.44
    adapt_batch: int = 50

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        if self.adapt_batch < 1:
            raise InvalidParameterValueError(f"adapt_batch must be positive, got {self.adapt_batch}.")

    def sample(self, posterior: GroupPosterior, n_draws: int, burnin: int, rng: np.random.Generator,
               previous: Optional[GroupChain] = None) -> GroupChain:
        if n_draws < 1 or burnin < 0:
            raise InvalidParameterValueError(f"Need n_draws >= 1 and burnin >= 0, got {n_draws}, {burnin}.")
        r = posterior.r
        if previous is not None and previous.draws.shape[1] == r:
            alpha = previous.last.copy()
            log_scales = previous.log_scales.copy()
            batches = previous.adapt_batches
        else:
            alpha = np.zeros(r)
            log_scales = np.zeros(r)
            batches = 0

        predictor = posterior.linear_predictor(alpha)
        current = posterior.log_density_from_predictor(predictor, alpha)
        if not np.isfinite(current):
            raise NonFiniteLogPosteriorError(
                f"Log posterior of group {posterior.group} is not finite at the chain start."
            )

        draws = np.empty((n_draws, r))
        accepted = np.zeros(r)
        batch_accepted = np.zeros(r)
        # Stream layout depends only on (burnin, n_draws, r)
        steps = rng.standard_normal((burnin + n_draws, r))
        log_uniforms = np.log(rng.random((burnin + n_draws, r)))

        for sweep in range(burnin + n_draws):
            for m in range(r):
                delta = np.exp(log_scales[m]) * steps[sweep, m]
                proposal_predictor = predictor + posterior.loaded[:, m] * delta
                alpha[m] += delta
                proposal = posterior.log_density_from_predictor(proposal_predictor, alpha)
                if np.isnan(proposal):
                    raise NonFiniteLogPosteriorError(
                        f"Log posterior of group {posterior.group} is NaN at a proposal."
                    )
                if log_uniforms[sweep, m] < proposal - current:
                    predictor = proposal_predictor
                    current = proposal
                    if sweep < burnin:
                        batch_accepted[m] += 1
                    else:
                        accepted[m] += 1
                else:
                    alpha[m] -= delta

            if sweep < burnin and (sweep + 1) % self.adapt_batch == 0:
                batches += 1
                log_scales += (batch_accepted / self.adapt_batch - self.target_accept) / np.sqrt(batches)
                batch_accepted[:] = 0
            if sweep >= burnin:
                draws[sweep - burnin] = alpha

        acceptance = accepted / n_draws
        self.logger.debug(f"Group {posterior.group}: acceptance {np.round(acceptance, 3).tolist()}, "
                          f"scales {np.round(np.exp(log_scales), 3).tolist()}")
        return GroupChain(draws=draws, acceptance=acceptance, log_scales=log_scales, adapt_batches=batches)
