from services.transformers.base_transformer import Transformer
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union
import logging

import numpy as np
import pandas as pd

from app.errors import InvalidPairError

Column = Union[int, str]


def tsp_transform(expr, pairs: Sequence[Tuple[Column, Column]]) -> np.ndarray:
    """
    Top scoring pair indicators I(expr[:, A] > expr[:, B]) per pair, ties map to 0.

    ``expr`` is an N x g array (pairs by column index) or a DataFrame (pairs by name or index).
    """
    if isinstance(expr, pd.DataFrame):
        names = list(expr.columns)
        values = expr.to_numpy(dtype=np.float64)
    else:
        values = np.asarray(expr, dtype=np.float64)
        names = []

    def resolve(column: Column) -> int:
        if isinstance(column, str):
            if column not in names:
                raise InvalidPairError(f"Column '{column}' does not exist.")
            return names.index(column)
        if not 0 <= int(column) < values.shape[1]:
            raise InvalidPairError(f"Column index {column} is out of range for {values.shape[1]} columns.")
        return int(column)

    indicators = np.zeros((values.shape[0], len(pairs)), dtype=np.int64)
    for position, (first, second) in enumerate(pairs):
        a, b = resolve(first), resolve(second)
        if a == b:
            raise InvalidPairError(f"A pair needs two distinct columns, got ({first}, {second}).")
        indicators[:, position] = values[:, a] > values[:, b]
    return indicators


@dataclass
class TSPTransformer(Transformer):
    """Replaces raw expression columns by binary top scoring pair covariates."""
    pairs: List[Tuple[Column, Column]] = field(default_factory=list)

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def transform(self, data: pd.DataFrame) -> pd.DataFrame:
        indicators = tsp_transform(data, self.pairs)
        columns = [f"{a}>{b}" for a, b in self.pairs]
        self.logger.debug(f"Built {len(columns)} TSP indicators.")
        return pd.DataFrame(indicators, columns=columns, index=data.index)
