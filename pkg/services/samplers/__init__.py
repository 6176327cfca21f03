from .base import PosteriorSampler
from .implementations import AdaptiveRandomWalkSampler, GroupPosterior, log_posterior_alpha
from .estep import sample_posterior, run_estep

__all__ = [
    'PosteriorSampler',
    'AdaptiveRandomWalkSampler',
    'GroupPosterior',
    'log_posterior_alpha',
    'sample_posterior',
    'run_estep',
]
