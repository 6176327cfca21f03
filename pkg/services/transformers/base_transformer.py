from abc import ABC, abstractmethod


class Transformer(ABC):
    """
    Base class for dataset transforms run between extraction and the task of a pipeline.

    ``prepare_transformation`` receives the ``preparation`` kwargs of the pipeline (fitted
    constants, grids); ``transform`` maps one dataset to the next.
    """

    def prepare_transformation(self, *args, **kwargs):
        """Optional hook; stateless transforms leave it as is."""

    @abstractmethod
    def transform(self, data):
        """Returns the transformed dataset."""
