from abc import ABC, abstractmethod


class ResultSink(ABC):
    """
    Base class for writing run artifacts.
    """

    @abstractmethod
    def load_data(self, *args, **kwargs):
        """
        Write a payload.
        """
        pass
