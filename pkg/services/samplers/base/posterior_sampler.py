from abc import ABC, abstractmethod


class PosteriorSampler(ABC):
    """
    Base class for samplers of a group's latent factors.
    """

    @abstractmethod
    def sample(self, *args, **kwargs):
        """
        Draws retained samples from a group posterior.
        Must be implemented in subclasses.
        """
        pass
