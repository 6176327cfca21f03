from dataclasses import dataclass
from typing import List

import numpy as np

from services.penalties.base import Penalty, Piece


@dataclass(frozen=True)
class LassoPenalty(Penalty):
    """rho(t) = lambda t."""

    def pieces(self, lam: float) -> List[Piece]:
        return [Piece(0.0, np.inf, 0.0, lam, 0.0)]
