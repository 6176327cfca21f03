from typing import Optional
import logging
import warnings

import numpy as np

from app.errors import GroupTooSmallError
from app.warnings import SparseIntervalWarning
from models.configs import FitConfig
from models.results import PseudoEffectsMatrix
from models.survival import DesignMatrices, IntervalGrid, SurvivalDataset
from services.engine import build_design, init_fixed_effects
from services.selection.lambda_grid import lambda0_max

logger = logging.getLogger(__name__)


def pseudo_random_effects(data: SurvivalDataset, grid: IntervalGrid, cfg: FitConfig,
                          design: Optional[DesignMatrices] = None, penalty_ratio: float = 0.01) -> PseudoEffectsMatrix:
    """
    Fits the penalized fixed-effects model on each group alone at ``penalty_ratio`` * lambda0_max
    and stacks gamma_k = (psi_tilde_1, beta[random columns]) as columns, centered across groups.

    A group without events in some interval keeps the pooled baseline shape psi_tilde_2..J and
    only estimates its level psi_tilde_1 and beta.
    """
    design = design or build_design(data, grid, cfg.random_columns)
    lambda0 = penalty_ratio * lambda0_max(design, cfg.penalty)
    pooled_psi, _ = init_fixed_effects(design, lambda0, cfg.penalty, cfg)
    columns = list(design.random_columns)

    estimates, groups, fallback = [], [], []
    for code in range(len(data.group_labels)):
        rows = design.group_rows[code]
        if rows.size == 0 and not np.any(data.groups == code):
            continue
        label = data.group_labels[code]
        if not np.any(data.status[data.groups == code] == 1):
            raise GroupTooSmallError(label)

        group_design = build_design(data.subset_groups([code]), grid, columns)
        empty = np.flatnonzero(group_design.long_form.events_per_interval() == 0)
        if empty.size:
            warnings.warn(SparseIntervalWarning(label, (empty + 1).tolist()), stacklevel=2)
            free_psi = np.zeros(design.n_intervals, dtype=bool)
            free_psi[0] = True
            psi_tilde, beta = init_fixed_effects(group_design, lambda0, cfg.penalty, cfg,
                                                 psi_start=pooled_psi, free_psi=free_psi)
            fallback.append(label)
        else:
            psi_tilde, beta = init_fixed_effects(group_design, lambda0, cfg.penalty, cfg)
        estimates.append(np.concatenate(([psi_tilde[0]], beta[columns])))
        groups.append(label)
        logger.debug(f"Pseudo effects of group {label!r}: {len(np.flatnonzero(beta))} nonzero coefficients")

    return PseudoEffectsMatrix.from_estimates(np.column_stack(estimates), groups, fallback)
