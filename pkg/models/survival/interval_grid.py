from dataclasses import dataclass

import numpy as np

from app.errors import InvalidParameterValueError


@dataclass(frozen=True)
class IntervalGrid:
    """
    Cut points 0 = tau_0 < tau_1 < ... < tau_{J-1} < tau_J = inf of a piecewise constant hazard.

    Only the finite interior cut points are stored; the first interval starts at 0 and the
    last one is unbounded, so every nonnegative time falls in some interval.
    """
    cutpoints: np.ndarray

    def __post_init__(self):
        cutpoints = np.array(self.cutpoints, dtype=np.float64, copy=True).reshape(-1)
        if cutpoints.size < 1:
            raise InvalidParameterValueError("An interval grid needs at least one finite cut point (J >= 2).")
        if not np.all(np.isfinite(cutpoints)):
            raise InvalidParameterValueError("Cut points must be finite; the last interval is open by construction.")
        if cutpoints[0] <= 0:
            raise InvalidParameterValueError(f"The first cut point must be positive, got {cutpoints[0]}.")
        if np.any(np.diff(cutpoints) <= 0):
            raise InvalidParameterValueError("Cut points must be strictly increasing.")
        cutpoints.setflags(write=False)
        object.__setattr__(self, "cutpoints", cutpoints)

    @property
    def n_intervals(self) -> int:
        return int(self.cutpoints.size + 1)

    @property
    def lower(self) -> np.ndarray:
        return np.concatenate(([0.0], self.cutpoints))

    @property
    def upper(self) -> np.ndarray:
        return np.concatenate((self.cutpoints, [np.inf]))

    def locate(self, times) -> np.ndarray:
        """
        Index (0-based) of the interval (tau_{j-1}, tau_j] holding each time.

        A time equal to a cut point belongs to the interval that ends there, the last
        interval with positive exposure for that subject. Time 0 maps to the first interval.
        """
        return np.searchsorted(self.cutpoints, np.asarray(times, dtype=np.float64), side="left")

    def to_list(self):
        return [float(c) for c in self.cutpoints]
