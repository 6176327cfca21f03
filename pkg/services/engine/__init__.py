from .mcecm import build_design, closed_form_baseline, init_fixed_effects, init_theta, fit_mcecm

__all__ = [
    'build_design',
    'closed_form_baseline',
    'init_fixed_effects',
    'init_theta',
    'fit_mcecm',
]
