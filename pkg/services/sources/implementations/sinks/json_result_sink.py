from dataclasses import dataclass
from typing import Optional
import logging
import os

from app.utils import save_json_to_file, to_jsonable
from services.sources.base import ResultSink


@dataclass
class JSONResultSink(ResultSink):
    """Writes a payload as indented JSON with sorted keys; NaN and infinity are written as null."""
    path: Optional[str] = None

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def load_data(self, payload: dict) -> dict:
        payload = to_jsonable(payload)
        if self.path:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            save_json_to_file(payload, self.path)
            self.logger.info(f"Wrote results to {self.path}")
        return payload
