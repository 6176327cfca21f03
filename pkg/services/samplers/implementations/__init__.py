from .group_posterior import GroupPosterior, log_posterior_alpha
from .adaptive_random_walk import AdaptiveRandomWalkSampler

__all__ = [
    'GroupPosterior',
    'AdaptiveRandomWalkSampler',
    'log_posterior_alpha',
]
