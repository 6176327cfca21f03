"""
This package contains custom warning classes for the application.

It provides a structured way to issue warnings in different contexts, such as:
- Performance-related warnings
- Interval and group structure warnings
- Convergence warnings

All warning classes can be imported from this module for ease of use.

Example:
    from app.warnings import ExcessiveProcessesWarning, IntervalCountWarning
"""
from .base_warning import CustomWarning
from .performance_warnings import ExcessiveProcessesWarning
from .data_warnings import IntervalCountWarning, SparseIntervalWarning
from .convergence_warnings import NonConvergenceWarning
