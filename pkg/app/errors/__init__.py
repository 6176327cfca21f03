"""
This package contains custom error classes for the application.

It provides a structured way to handle various types of errors, such as:
- Survival data validation errors
- Parameter and shape validation errors
- Numerical failures of the sampler and optimizer
- Input/Output errors

Every error carries a stable ``code`` that the command-line runner reports.

Example:
    from app.errors import TooFewEventsError, StepSizeUnderflowError
"""
from .base_error import CustomError
from .data_errors import (
    DataSchemaError, InvalidSurvivalDataError, ZeroVarianceColumnError, TooFewEventsError,
    DegenerateQuantilesError, InvalidPairError, GroupTooSmallError
)
from .validation_errors import InvalidParameterValueError, DimensionMismatchError
from .numerical_errors import (
    NumericalError, NonFiniteLogPosteriorError, NonFiniteObjectiveError, StepSizeUnderflowError,
    RankDeficientError, DegenerateGradientError, NoComparablePairsError
)
from .io_errors import InputNotFoundError, ConfigNotFoundError
