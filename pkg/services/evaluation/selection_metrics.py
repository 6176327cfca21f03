from typing import Optional
import logging

import numpy as np

from app.errors import DimensionMismatchError
from models.configs import SimConfig
from models.results import FitResult, SelectionMetrics
from models.survival import SurvivalDataset
from services.evaluation.concordance import c_index

logger = logging.getLogger(__name__)


def _percent(numerator: int, denominator: int, empty: float) -> float:
    return 100.0 * numerator / denominator if denominator else empty


def evaluate_selection(fit: FitResult, truth: SimConfig, data: Optional[SurvivalDataset] = None,
                       runtime: float = 0.0, r_hat: Optional[int] = None) -> SelectionMetrics:
    """
    Compares a fit with the generating configuration. Random-effect rows are compared in the
    full (p+1)-row space of (intercept, predictors); with ``data`` the fixed-effects risk score's
    concordance on that data is added.
    """
    p = truth.n_predictors
    if fit.params.p != p:
        raise DimensionMismatchError(f"The fit has {fit.params.p} predictors, the truth {p}.")
    rows = np.array([0] + [column + 1 for column in fit.random_columns], dtype=np.int64)
    if rows.size != fit.params.q:
        raise DimensionMismatchError(f"random_columns describe {rows.size} rows, the fit has {fit.params.q}.")

    true_fixed = set(truth.true_fixed())
    selected_fixed = set(fit.selected_fixed)
    true_random = set(truth.true_random())
    selected_random = {int(rows[t]) for t in fit.selected_random}

    if true_fixed:
        support = sorted(true_fixed)
        deviation = float(np.mean(np.abs(fit.params.beta[support] - truth.beta_array()[support])))
    else:
        deviation = float(np.mean(np.abs(fit.params.beta - truth.beta_array())))

    sigma = np.zeros((p + 1, p + 1))
    sigma[np.ix_(rows, rows)] = fit.sigma_hat
    frob = float(np.linalg.norm(sigma - truth.sigma_true(), "fro")) / max(1, len(selected_random))

    concordance = None
    censor_rate = 0.0
    if data is not None:
        censor_rate = 1.0 - float(np.mean(data.status))
        concordance = c_index(fit.risk_scores(data), data.times, data.status)

    metrics = SelectionMetrics(
        tp_fixed=_percent(len(selected_fixed & true_fixed), len(true_fixed), 100.0),
        fp_fixed=_percent(len(selected_fixed - true_fixed), p - len(true_fixed), 0.0),
        tp_random=_percent(len(selected_random & true_random), len(true_random), 100.0),
        fp_random=_percent(len(selected_random - true_random), p + 1 - len(true_random), 0.0),
        mean_abs_dev=deviation,
        frob_std=frob,
        censor_rate=censor_rate,
        runtime=runtime,
        c_index=concordance,
        r_hat=r_hat,
    )
    logger.debug(f"Selection metrics: {metrics.model_dump()}")
    return metrics
