from dataclasses import dataclass
from typing import Optional
import logging
import os

import pandas as pd

from services.sources.base import ResultSink


@dataclass
class CSVResultSink(ResultSink):
    """Writes a DataFrame as comma-separated text without the index."""
    path: Optional[str] = None
    float_format: Optional[str] = None

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def load_data(self, frame: pd.DataFrame) -> Optional[str]:
        if not self.path:
            return None
        os.makedirs(os.path.dirname(os.path.abspath(self.path)), exist_ok=True)
        frame.to_csv(self.path, index=False, float_format=self.float_format)
        self.logger.info(f"Wrote {len(frame)} rows to {self.path}")
        return self.path
