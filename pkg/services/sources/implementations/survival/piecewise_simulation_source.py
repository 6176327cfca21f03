from dataclasses import dataclass
import logging

import numpy as np

from app.utils import spawn_generator
from models.configs import SimConfig
from models.survival import SurvivalDataset
from services.sources.base import SurvivalSource
from services.transformers import standardize_covariates

logger = logging.getLogger(__name__)


def simulate_dataset(cfg: SimConfig) -> SurvivalDataset:
    """
    Draws a dataset from the piecewise constant hazard mixed-effects model.

    Covariates are standard normal and then standardized; each group shares one alpha_k ~ N(0, I_r)
    and gamma_k = B alpha_k with z = (1, x). Event times chain exponential waiting times through the
    intervals with rates exp(psi*_j + x^T beta + z^T gamma_k); censoring is Uniform(0, censor_max).
    """
    rng = spawn_generator(cfg.seed)
    n, p, k = cfg.n_subjects, cfg.n_predictors, cfg.n_groups
    groups = np.repeat(np.arange(k), [block.size for block in np.array_split(np.arange(n), k)])

    covariates, centers, scales = standardize_covariates(rng.standard_normal((n, p)))
    loadings = cfg.loading_matrix()
    alpha = rng.standard_normal((k, loadings.shape[1]))
    gamma = alpha @ loadings.T                                   # K x (p + 1)
    eta = covariates @ cfg.beta_array() + gamma[groups, 0] + np.sum(covariates * gamma[groups, 1:], axis=1)

    bounds = np.concatenate(([0.0], cfg.sim_cutpoints, [np.inf]))
    event_times = np.full(n, np.inf)
    pending = np.ones(n, dtype=bool)
    for j, log_hazard in enumerate(cfg.psi_star):
        waiting = rng.exponential(size=n) / np.exp(log_hazard + eta)
        ends_here = pending & (bounds[j] + waiting < bounds[j + 1])
        event_times[ends_here] = bounds[j] + waiting[ends_here]
        pending &= ~ends_here

    censor_times = rng.uniform(0.0, cfg.censor_max, size=n)
    times = np.minimum(event_times, censor_times)
    status = (event_times < censor_times).astype(np.int64)
    logger.debug(f"Simulated {n} subjects in {k} groups, censoring rate {1 - status.mean():.3f}")

    data = SurvivalDataset.build(
        groups=groups + 1,
        times=times,
        status=status,
        covariates=covariates,
        covariate_names=[f"x{j + 1}" for j in range(p)],
    )
    return data.with_covariates(data.covariates, centers, scales)


@dataclass
class PiecewiseSimulationSource(SurvivalSource):
    """Source wrapping ``simulate_dataset`` so simulated data flow through the same pipelines as files."""
    config: SimConfig

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def check_source_exists(self) -> bool:
        return True

    def extract_data(self) -> SurvivalDataset:
        data = simulate_dataset(self.config)
        self.logger.info(f"Simulated dataset with seed {self.config.seed}: {data.n_events} events")
        return data
