from dataclasses import dataclass
from typing import List

import numpy as np

from services.penalties.base import Penalty, Piece


@dataclass(frozen=True)
class SCADPenalty(Penalty):
    """
    Smoothly clipped absolute deviation:
    lambda t on [0, lambda], (2 gamma lambda t - t^2 - lambda^2) / (2 (gamma - 1)) on [lambda, gamma lambda],
    lambda^2 (gamma + 1) / 2 beyond.
    """
    gamma: float = 3.7

    def pieces(self, lam: float) -> List[Piece]:
        g = self.gamma
        return [
            Piece(0.0, lam, 0.0, lam, 0.0),
            Piece(lam, g * lam, -lam ** 2 / (2.0 * (g - 1.0)), g * lam / (g - 1.0), -1.0 / (2.0 * (g - 1.0))),
            Piece(g * lam, np.inf, lam ** 2 * (g + 1.0) / 2.0, 0.0, 0.0),
        ]
