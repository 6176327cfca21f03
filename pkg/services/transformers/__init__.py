from .base_transformer import Transformer
from .covariate_standardizer import CovariateStandardizer, standardize_covariates
from .long_form_expander import LongFormExpander, compute_cutpoints, expand_long_form
from .tsp_transformer import TSPTransformer, tsp_transform

__all__ = [
    "CovariateStandardizer",
    "LongFormExpander",
    "TSPTransformer",
    "standardize_covariates",
    "compute_cutpoints",
    "expand_long_form",
    "tsp_transform",
]
