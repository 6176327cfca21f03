import numpy as np


def spawn_generator(seed: int, *keys: int) -> np.random.Generator:
    """
    Returns an independent generator for the stream identified by ``(seed, *keys)``.

    The same key tuple always yields the same stream, regardless of which thread
    or in which order streams are requested.
    """
    entropy = [int(seed)] + [int(k) for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))
