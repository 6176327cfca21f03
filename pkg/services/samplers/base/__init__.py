from .posterior_sampler import PosteriorSampler
