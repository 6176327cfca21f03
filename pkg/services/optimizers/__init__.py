from .q_function import QFunction, q1_value, q2_value
from .mm_optimizer import MMOptimizer, mstep

__all__ = [
    'QFunction',
    'MMOptimizer',
    'q1_value',
    'q2_value',
    'mstep',
]
