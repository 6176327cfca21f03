import numpy as np

from models.params import ModelParams, PosteriorSamples
from models.results import FitResult
from models.survival import DesignMatrices
from services.optimizers import QFunction, q2_value


def effective_dimension(params: ModelParams) -> int:
    """Nonzero fixed effects plus nonzero loading entries plus the J baseline terms."""
    return int(np.count_nonzero(params.beta) + np.count_nonzero(params.loadings) + params.n_intervals)


def bic_icq_from_components(neg2_q: float, dimension: int, n_subjects: int) -> float:
    """-2 Q-hat + d log N."""
    return float(neg2_q + dimension * np.log(n_subjects))


def q_component(params: ModelParams, reference_samples: PosteriorSamples, design: DesignMatrices) -> float:
    """2 (Q1 + Q2) at ``params`` under the reference draws."""
    return 2.0 * (QFunction(design, reference_samples).value(params) + q2_value(reference_samples))


def bic_icq(fit: FitResult, reference_samples: PosteriorSamples, design: DesignMatrices) -> float:
    """BIC-ICQ of a fit, the expectation taken under draws of the minimal-penalty model."""
    return bic_icq_from_components(q_component(fit.params, reference_samples, design),
                                   effective_dimension(fit.params), design.n_subjects)
