from dataclasses import dataclass, field
from typing import List

import pandas as pd


@dataclass
class BenchmarkReport:
    """
    Records of the scored replicates with their summary; replicates that raised are listed in ``failures``.
    Column names follow the published table headers.
    """
    records: pd.DataFrame
    summary: dict
    failures: List[dict] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        """Replicate rows followed by one summary row labeled ``replicate = "summary"``."""
        summary = {key: value for key, value in self.summary.items() if key in self.records.columns}
        summary["replicate"] = "summary"
        return pd.concat([self.records.astype({"replicate": object}), pd.DataFrame([summary])], ignore_index=True)
