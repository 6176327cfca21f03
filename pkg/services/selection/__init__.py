from .lambda_grid import lambda_grid, lambda0_max, lambda1_max, log_sequence
from .bic_icq import bic_icq, bic_icq_from_components, effective_dimension, q_component
from .two_stage_search import two_stage_search
from .pseudo_effects import pseudo_random_effects
from .growth_ratio import growth_ratio_r, growth_ratio_from_eigenvalues, estimate_r, default_max_factors

__all__ = [
    'lambda_grid',
    'lambda0_max',
    'lambda1_max',
    'log_sequence',
    'bic_icq',
    'bic_icq_from_components',
    'effective_dimension',
    'q_component',
    'two_stage_search',
    'pseudo_random_effects',
    'growth_ratio_r',
    'growth_ratio_from_eigenvalues',
    'estimate_r',
    'default_max_factors',
]
