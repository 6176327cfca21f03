from typing import Optional
import logging

import numpy as np
from scipy.linalg import svdvals

from app.errors import InvalidParameterValueError, RankDeficientError
from models.configs import FitConfig
from models.results import GrowthRatioResult, PseudoEffectsMatrix
from models.survival import DesignMatrices, IntervalGrid, SurvivalDataset
from services.selection.pseudo_effects import pseudo_random_effects

logger = logging.getLogger(__name__)

# Tail sums at or below this share of the total spectrum are zero
TAIL_FLOOR = 1e-28


def default_max_factors(q: int, n_groups: int) -> int:
    return max(1, min(min(q, n_groups) - 2, 10))


def growth_ratio_from_eigenvalues(eigenvalues, max_factors: int) -> GrowthRatioResult:
    """
    GR(j) = log(1 + mu*_j) / log(1 + mu*_{j+1}) with mu*_j = mu_j / V(j), V(j) = sum_{l>j} mu_l,
    for j = 1..U; the estimate is the maximizing j.
    """
    eigenvalues = np.sort(np.clip(np.asarray(eigenvalues, dtype=np.float64), 0.0, None))[::-1]
    if max_factors < 1:
        raise InvalidParameterValueError(f"U must be at least 1, got {max_factors}.")
    if eigenvalues.size < max_factors + 1:
        raise InvalidParameterValueError(f"U = {max_factors} needs at least {max_factors + 1} eigenvalues.")

    tails = np.cumsum(eigenvalues[::-1])[::-1] - eigenvalues
    floor = TAIL_FLOOR * max(float(eigenvalues.sum()), np.finfo(float).tiny)
    if np.any(tails[:max_factors] <= floor):
        first = int(np.flatnonzero(tails[:max_factors] <= floor)[0]) + 1
        raise RankDeficientError(f"The eigenvalue tail V({first}) vanishes; lower U below {first}.")

    scaled = np.full(max_factors + 1, np.inf)
    positive = tails[:max_factors + 1] > floor
    scaled[positive] = eigenvalues[:max_factors + 1][positive] / tails[:max_factors + 1][positive]
    growth = np.log1p(scaled)
    ratios = growth[:max_factors] / growth[1:]
    r_hat = int(np.argmax(ratios)) + 1
    return GrowthRatioResult(eigenvalues=eigenvalues, tail_sums=tails, ratios=ratios,
                             max_factors=max_factors, r_hat=r_hat)


def growth_ratio_r(G, max_factors: Optional[int] = None) -> GrowthRatioResult:
    """Growth Ratio estimate of the number of latent factors from a q x K pseudo-effects matrix."""
    matrix = G.G if isinstance(G, PseudoEffectsMatrix) else np.asarray(G, dtype=np.float64)
    q, n_groups = matrix.shape
    if max_factors is None:
        max_factors = default_max_factors(q, n_groups)
    # Squared singular values keep small eigenvalues of G G^T accurate
    eigenvalues = svdvals(matrix) ** 2 / (q * n_groups)
    if eigenvalues.size < max_factors + 1:
        eigenvalues = np.concatenate((eigenvalues, np.zeros(max_factors + 1 - eigenvalues.size)))
    result = growth_ratio_from_eigenvalues(eigenvalues, max_factors)
    logger.info(f"Growth Ratio sequence {np.round(result.ratios, 4).tolist()} gives r = {result.r_hat}")
    return result


def estimate_r(data: SurvivalDataset, grid: IntervalGrid, cfg: FitConfig, max_factors: Optional[int] = None,
               design: Optional[DesignMatrices] = None, penalty_ratio: float = 0.01) -> GrowthRatioResult:
    """Pseudo random effects followed by the Growth Ratio."""
    pseudo = pseudo_random_effects(data, grid, cfg, design, penalty_ratio)
    return growth_ratio_r(pseudo, max_factors)
