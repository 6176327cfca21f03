"""
Contains custom warnings related to data size or structure.
"""

from app.warnings import CustomWarning


class IntervalCountWarning(CustomWarning):
    """Warning for an interval count outside the usual 5 to 10 range."""

    def __init__(self, n_intervals: int):
        super().__init__(
            f"{n_intervals} time intervals requested; between 5 and 10 intervals is the usual choice."
        )


class SparseIntervalWarning(CustomWarning):
    """Warning for a group without events in some intervals; its baseline shape falls back to the pooled fit."""

    def __init__(self, group, empty_intervals):
        super().__init__(
            f"Group {group!r} has no events in intervals {list(empty_intervals)}; using pooled baseline hazard shape."
        )
