from dataclasses import dataclass, field
from typing import Any, Callable, Optional
import logging

from app.errors import CustomError, InputNotFoundError


@dataclass
class SurvivalAnalysisStandardPipeline:
    """
    A standard pipeline that reads a survival dataset, prepares it and runs one analysis on it.

    The extractor yields a SurvivalDataset, the optional transformer prepares it (standardization),
    the task computes the analysis payload and the loader writes that payload.

    Attributes:
        extractor_class (type): The class responsible for reading the dataset.
        transformer_class (type, optional): The class preparing the dataset; skipped when None.
        task (Callable): The analysis, called as ``task(data, **task_kwargs['run'])``.
        loader_class (type): The class writing the payload.
        fail_on_missing (bool):
            - If True, raises InputNotFoundError when the source does not exist.
            - If False, the process stops with a warning and returns None.
        extractor_kwargs (dict): Configuration for the extractor.
        transformer_kwargs (dict): Configuration for the transformer.
        task_kwargs (dict): Configuration for the task.
        loader_kwargs (dict): Configuration for the loader.
    """
    extractor_class: type
    transformer_class: Optional[type]
    task: Callable
    loader_class: type
    fail_on_missing: bool = True

    extractor_kwargs: dict = field(init=False, default_factory=dict)
    transformer_kwargs: dict = field(init=False, default_factory=dict)
    task_kwargs: dict = field(init=False, default_factory=dict)
    loader_kwargs: dict = field(init=False, default_factory=dict)

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        self.data = None
        self.result = None

    def set_extractor_kwargs(self, section: str, kwargs: dict):
        """Set extractor configuration parameters for a specific section."""
        self.logger.info(f"Setting extractor kwargs for section '{section}'.")
        self.extractor_kwargs[section] = kwargs

    def set_transformer_kwargs(self, section: str, kwargs: dict):
        """Set transformer configuration parameters for a specific section."""
        self.logger.info(f"Setting transformer kwargs for section '{section}'.")
        self.transformer_kwargs[section] = kwargs

    def set_task_kwargs(self, section: str, kwargs: dict):
        """Set task configuration parameters for a specific section."""
        self.logger.info(f"Setting task kwargs for section '{section}'.")
        self.task_kwargs[section] = kwargs

    def set_loader_kwargs(self, section: str, kwargs: dict):
        """Set loader configuration parameters for a specific section."""
        self.logger.info(f"Setting loader kwargs for section '{section}'.")
        self.loader_kwargs[section] = kwargs

    def run(self) -> Any:
        """Execute the pipeline: extract, prepare, analyse and write. Returns the loader's output."""
        self.logger.info("Starting the pipeline execution.")
        try:
            extractor = self.extractor_class(**self.extractor_kwargs.get('init', {}))
            loader = self.loader_class(**self.loader_kwargs.get('init', {}))

            if not extractor.check_source_exists(**self.extractor_kwargs.get('check_exists', {})):
                if self.fail_on_missing:
                    self.logger.error("Source does not exist! Process aborted.")
                    raise InputNotFoundError(str(self.extractor_kwargs.get('init', {})))
                self.logger.warning("Source does not exist! Process halted gracefully.")
                return None

            data = extractor.extract_data(**self.extractor_kwargs.get('extract', {}))
            self.logger.info(f"Extracted {data.n_subjects} subjects in {data.n_groups} groups.")

            if self.transformer_class is not None:
                transformer = self.transformer_class(**self.transformer_kwargs.get('init', {}))
                transformer.prepare_transformation(**self.transformer_kwargs.get('preparation', {}))
                data = transformer.transform(data, **self.transformer_kwargs.get('transform', {}))
            self.data = data

            self.logger.info("Running the analysis task.")
            self.result = self.task(data, **self.task_kwargs.get('run', {}))

            self.logger.debug("Writing the analysis payload.")
            return loader.load_data(self.result, **self.loader_kwargs.get('load', {}))
        except CustomError as e:
            self.logger.error(f"Pipeline failed with {e.code}: {e.message}")
            raise
        except Exception as e:
            self.logger.error(f"Unexpected error in pipeline execution: {e}")
            raise
