"""
Contains custom errors related to survival data validation and structure.
"""

from app.errors import CustomError


class DataSchemaError(CustomError):
    """Raised when an input table misses a required column or has an unusable type."""
    code = "DATA_SCHEMA"


class InvalidSurvivalDataError(CustomError):
    """Raised when survival times, statuses or groups violate the dataset invariants."""
    code = "DATA_INVALID"


class ZeroVarianceColumnError(InvalidSurvivalDataError):
    """Raised when a covariate column is constant and cannot be standardized."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"Covariate column {column} has zero variance.")


class TooFewEventsError(InvalidSurvivalDataError):
    """Raised when there are fewer observed events than requested intervals."""

    def __init__(self, n_events: int, n_intervals: int):
        self.n_events = n_events
        self.n_intervals = n_intervals
        super().__init__(f"{n_events} events cannot populate {n_intervals} intervals.")


class DegenerateQuantilesError(InvalidSurvivalDataError):
    """Raised when tied event-time quantiles collapse or empty an interval."""
    pass


class InvalidPairError(InvalidSurvivalDataError):
    """Raised when a top scoring pair references a missing column or the same column twice."""
    pass


class GroupTooSmallError(InvalidSurvivalDataError):
    """Raised when a group has no events for a group-specific fit."""

    def __init__(self, group):
        self.group = group
        super().__init__(f"Group {group!r} has no observed events.")
