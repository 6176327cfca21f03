from services.transformers.base_transformer import Transformer
from dataclasses import dataclass
from typing import Tuple
import logging

import numpy as np

from app.errors import ZeroVarianceColumnError, InvalidParameterValueError
from models.survival import SurvivalDataset


def standardize_covariates(covariates) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Centers every column to mean 0 and scales it to N^-1 sum x^2 = 1.

    Returns:
        (standardized matrix, centers, scales)
    """
    covariates = np.asarray(covariates, dtype=np.float64)
    if covariates.ndim != 2 or covariates.shape[0] < 2:
        raise InvalidParameterValueError("Standardization needs an N x p matrix with N >= 2.")
    constant = np.ptp(covariates, axis=0) == 0
    if np.any(constant):
        raise ZeroVarianceColumnError(int(np.flatnonzero(constant)[0]))
    centers = covariates.mean(axis=0)
    centered = covariates - centers
    scales = np.sqrt(np.mean(centered ** 2, axis=0))
    return centered / scales, centers, scales


@dataclass
class CovariateStandardizer(Transformer):
    """
    Replaces the covariates of a survival dataset by their standardized version and keeps
    the constants needed to report coefficients on the original scale.
    """

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)

    def transform(self, data: SurvivalDataset) -> SurvivalDataset:
        if data.standardized:
            self.logger.debug("Covariates already standardized, skipping.")
            return data
        if data.n_predictors == 0:
            return data.with_covariates(data.covariates, np.zeros(0), np.ones(0))
        standardized, centers, scales = standardize_covariates(data.covariates)
        self.logger.debug(f"Standardized {data.n_predictors} covariates of {data.n_subjects} subjects.")
        return data.with_covariates(standardized, centers, scales)
