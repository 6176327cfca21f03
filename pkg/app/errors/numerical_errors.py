"""
Contains custom errors raised by the numerical routines (sampler, optimizer, eigen analysis).
"""

from app.errors import CustomError


class NumericalError(CustomError):
    """Base class for numerical failures."""
    code = "NUMERICAL"


class NonFiniteLogPosteriorError(NumericalError):
    """Raised when the latent factor log posterior is not finite at the chain state."""
    pass


class NonFiniteObjectiveError(NumericalError):
    """Raised when the M-step objective evaluates to NaN or infinity."""
    pass


class StepSizeUnderflowError(NumericalError):
    """Raised when the backtracking line search drives the step size below its floor."""

    def __init__(self, step_size: float, floor: float):
        self.step_size = step_size
        super().__init__(f"Step size {step_size:.3e} fell below {floor:.0e}.")


class RankDeficientError(NumericalError):
    """Raised when the eigenvalue tail V(j) vanishes inside the Growth Ratio range."""
    pass


class DegenerateGradientError(NumericalError):
    """Raised when every score used to build a penalty grid is zero."""
    pass


class NoComparablePairsError(NumericalError):
    """Raised when a concordance index has no usable pairs."""
    pass
