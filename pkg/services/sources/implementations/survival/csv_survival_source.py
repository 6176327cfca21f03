from dataclasses import dataclass
import logging
import os

import pandas as pd

from app.errors import InputNotFoundError, DataSchemaError
from models.mappings import type_maps
from models.survival import SurvivalDataset
from services.sources.base import SurvivalSource


@dataclass
class CSVSurvivalSource(SurvivalSource):
    """
    Reads a comma-separated file with a header row and the columns ``group``, ``time``, ``status``
    followed by covariates in file order.
    """
    path: str
    encoding: str = "utf-8"

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def check_source_exists(self) -> bool:
        return os.path.isfile(self.path)

    def extract_data(self) -> SurvivalDataset:
        if not self.check_source_exists():
            raise InputNotFoundError(self.path)
        try:
            frame = pd.read_csv(self.path, sep=",", decimal=".", encoding=self.encoding)
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
            raise DataSchemaError(f"Cannot parse {self.path}: {e}")
        types = {column: dtype for column, dtype in type_maps["survival_csv"].items() if column in frame.columns}
        try:
            frame = frame.astype(types)
        except (TypeError, ValueError) as e:
            raise DataSchemaError(f"Unexpected column types in {self.path}: {e}")
        data = SurvivalDataset.from_frame(frame)
        self.logger.info(f"Read {data.n_subjects} subjects, {data.n_groups} groups and "
                         f"{data.n_predictors} covariates from {self.path}")
        return data
