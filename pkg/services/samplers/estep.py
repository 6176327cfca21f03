from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence
import logging
import os
import warnings

from app.utils import spawn_generator
from app.warnings import ExcessiveProcessesWarning
from models.params import GroupChain, ModelParams, PosteriorSamples
from models.survival import DesignMatrices
from services.samplers.implementations import AdaptiveRandomWalkSampler, GroupPosterior

logger = logging.getLogger(__name__)


def sample_posterior(design: DesignMatrices, group: int, params: ModelParams, n_draws: int, burnin: int,
                     seed: int, stream: Sequence[int] = (), previous: Optional[GroupChain] = None,
                     sampler: Optional[AdaptiveRandomWalkSampler] = None) -> GroupChain:
    """
    Draws ``n_draws`` retained samples of alpha_k for one group after ``burnin`` adapted sweeps.
    The result depends only on the inputs, the seed and the stream keys.
    """
    sampler = sampler or AdaptiveRandomWalkSampler()
    rng = spawn_generator(seed, *stream, group)
    return sampler.sample(GroupPosterior(design, group, params), n_draws, burnin, rng, previous)


def run_estep(design: DesignMatrices, params: ModelParams, n_draws: int, burnin: int, seed: int,
              stream: Sequence[int] = (), previous: Optional[PosteriorSamples] = None,
              sampler: Optional[AdaptiveRandomWalkSampler] = None, num_threads: int = 1) -> PosteriorSamples:
    """
    Samples every group present in the data. Chains run on a thread pool and are merged in
    group-code order, so the output does not depend on scheduling.
    """
    sampler = sampler or AdaptiveRandomWalkSampler()
    groups = design.present_groups()
    available_cores = os.cpu_count() or 1
    if num_threads > available_cores:
        warnings.warn(ExcessiveProcessesWarning(num_threads, available_cores), stacklevel=2)

    def run_group(group: int) -> GroupChain:
        warm = previous.chains[group] if previous is not None and group < len(previous.chains) else None
        return sample_posterior(design, group, params, n_draws, burnin, seed, stream, warm, sampler)

    if num_threads > 1 and len(groups) > 1:
        with ThreadPoolExecutor(max_workers=min(num_threads, len(groups))) as executor:
            results = list(executor.map(run_group, groups))
    else:
        results = [run_group(group) for group in groups]

    chains = [None] * design.n_group_codes
    for group, chain in zip(groups, results):
        chains[group] = chain
    samples = PosteriorSamples(tuple(chains))
    logger.debug(f"E-step drew {n_draws} samples for {len(groups)} groups (stream {tuple(stream)}).")
    return samples
