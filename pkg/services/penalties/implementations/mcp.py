from dataclasses import dataclass
from typing import List

import numpy as np

from services.penalties.base import Penalty, Piece


@dataclass(frozen=True)
class MCPPenalty(Penalty):
    """Minimax concave penalty: lambda t - t^2 / (2 gamma) up to gamma lambda, then flat at gamma lambda^2 / 2."""
    gamma: float = 3.0

    def pieces(self, lam: float) -> List[Piece]:
        knot = self.gamma * lam
        return [
            Piece(0.0, knot, 0.0, lam, -1.0 / (2.0 * self.gamma)),
            Piece(knot, np.inf, knot * lam / 2.0, 0.0, 0.0),
        ]
