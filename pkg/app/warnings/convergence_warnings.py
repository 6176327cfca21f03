"""
Contains custom warnings related to iterative fitting.
"""

from app.warnings import CustomWarning


class NonConvergenceWarning(CustomWarning):
    """Warning raised when the EM iteration cap is reached before the convergence rule holds."""
    pass
