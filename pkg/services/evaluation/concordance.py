import numpy as np

from app.errors import NoComparablePairsError, DimensionMismatchError

# Pairs are scored in blocks of earlier events to bound memory on large samples
_BLOCK = 1024


def c_index(risk, times, status) -> float:
    """
    Harrell's concordance of a risk score with right-censored outcomes.

    A pair (i, j) is comparable when subject i has an observed event and y_i < y_j; it is
    concordant when risk_i > risk_j, and a tie in risk counts one half. Ties in time are not comparable.
    """
    risk = np.asarray(risk, dtype=np.float64)
    times = np.asarray(times, dtype=np.float64)
    status = np.asarray(status)
    if not (risk.shape == times.shape == status.shape) or risk.ndim != 1:
        raise DimensionMismatchError("risk, times and status must be vectors of the same length.")

    events = np.flatnonzero(status == 1)
    concordant = 0.0
    comparable = 0
    for start in range(0, events.size, _BLOCK):
        block = events[start:start + _BLOCK]
        later = times[block][:, None] < times[None, :]
        difference = risk[block][:, None] - risk[None, :]
        comparable += int(later.sum())
        concordant += float(np.sum(later & (difference > 0))) + 0.5 * float(np.sum(later & (difference == 0)))
    if comparable == 0:
        raise NoComparablePairsError("No comparable pairs: every pair is censored first or tied in time.")
    return concordant / comparable
