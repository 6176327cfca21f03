from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import numpy as np

from app.errors import InvalidParameterValueError


class Piece(NamedTuple):
    """rho(t) = a + b t + e t^2 on lo <= t <= hi."""
    lo: float
    hi: float
    a: float
    b: float
    e: float


@dataclass(frozen=True)
class Penalty(ABC):
    """
    Folded-concave penalty rho(t; lambda, gamma) mixed with a ridge term:

        P(t) = pi * rho(t) + (1 - pi) * lambda / 2 * t^2,   t >= 0.

    Subclasses describe rho as a list of quadratic pieces; the proximal map is the exact global
    minimizer over those pieces, so it stays correct when the proximal objective is not convex.
    """
    gamma: Optional[float] = None
    pi: float = 1.0

    @abstractmethod
    def pieces(self, lam: float) -> List[Piece]:
        """Quadratic pieces of rho covering [0, inf), in increasing order."""
        pass

    def rho(self, t, lam: float):
        t = np.asarray(t, dtype=np.float64)
        result = np.zeros_like(t)
        assigned = np.zeros(t.shape, dtype=bool)
        for piece in self.pieces(lam):
            # last piece has hi = inf, so every t lands in exactly one piece
            mask = ~assigned & (t <= piece.hi)
            result = np.where(mask, piece.a + piece.b * t + piece.e * t ** 2, result)
            assigned |= mask
        return result

    def value(self, t, lam: float):
        """Penalty at t >= 0 (scalar or array)."""
        _check_lambda(lam)
        t = np.asarray(t, dtype=np.float64)
        if np.any(t < 0):
            raise InvalidParameterValueError("Penalty arguments must be nonnegative.")
        result = self.pi * self.rho(t, lam) + (1.0 - self.pi) * lam / 2.0 * t ** 2
        return float(result) if result.ndim == 0 else result

    def prox(self, z: float, step: float, lam: float) -> float:
        """argmin_x (x - z)^2 / (2 step) + P(|x|); ties go to the smaller |x|."""
        _check_lambda(lam)
        if not step > 0:
            raise InvalidParameterValueError(f"The proximal step must be positive, got {step}.")
        u = abs(float(z))
        if u == 0.0:
            return 0.0
        ridge = (1.0 - self.pi) * lam

        def objective(x, piece):
            return (x - u) ** 2 / (2.0 * step) + self.pi * (piece.a + piece.b * x + piece.e * x ** 2) \
                + ridge / 2.0 * x ** 2

        candidates = []
        for piece in self.pieces(lam):
            hi = min(piece.hi, max(u, piece.lo))
            points = [piece.lo, hi]
            curvature = 1.0 / (2.0 * step) + self.pi * piece.e + ridge / 2.0
            if curvature > 0:
                stationary = (u / step - self.pi * piece.b) / (2.0 * curvature)
                points.append(min(max(stationary, piece.lo), hi))
            candidates.extend((objective(x, piece), x) for x in points if x <= hi)
            if piece.hi >= u:
                break

        best = min(value for value, _ in candidates)
        slack = 1e-14 * max(1.0, abs(best))
        x = min(x for value, x in candidates if value <= best + slack)
        return float(np.copysign(x, z)) if x > 0 else 0.0

    def prox_group(self, z, step: float, lam: float) -> np.ndarray:
        """Group proximal map: the scalar map applied to ||z||_2, direction kept."""
        z = np.asarray(z, dtype=np.float64)
        norm = float(np.linalg.norm(z))
        if norm == 0.0:
            return np.zeros_like(z)
        shrunk = self.prox(norm, step, lam)
        return z * (shrunk / norm)

    def zero_threshold(self, lam: float) -> float:
        """Smallest |gradient| at the origin that moves a coordinate away from 0: pi * lambda."""
        return self.pi * lam


def _check_lambda(lam: float):
    if not lam >= 0:
        raise InvalidParameterValueError(f"The penalty level must be nonnegative, got {lam}.")
