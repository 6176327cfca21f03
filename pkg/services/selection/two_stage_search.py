from typing import Optional
import logging

import numpy as np

from app.errors import InvalidParameterValueError, NonFiniteObjectiveError
from models.configs import FitConfig
from models.results import FitResult, PathEntry, SelectionPath
from models.survival import DesignMatrices, IntervalGrid, SurvivalDataset
from services.engine import build_design, fit_mcecm
from services.selection.bic_icq import bic_icq

logger = logging.getLogger(__name__)


def _check_grid(name: str, grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size < 1 or np.any(grid < 0) or np.any(np.diff(grid) <= 0):
        raise InvalidParameterValueError(f"{name} must be a nonempty, nonnegative, strictly increasing sequence.")
    return grid


def two_stage_search(data: SurvivalDataset, grid: IntervalGrid, r: int, cfg: FitConfig, lambda0_seq, lambda1_seq,
                     design: Optional[DesignMatrices] = None) -> SelectionPath:
    """
    Stage 1 fits (lambda0_min, lambda1) for ascending lambda1 with warm starts and keeps the
    BIC-ICQ minimizer lambda1_opt; stage 2 fits (lambda0, lambda1_opt) for ascending lambda0,
    warm-started from the stage-1 optimum. The best model is the stage-2 BIC-ICQ minimizer.
    BIC-ICQ draws come from the first (smallest-penalty) fit.
    """
    lambda0_seq = _check_grid("lambda0 grid", lambda0_seq)
    lambda1_seq = _check_grid("lambda1 grid", lambda1_seq)
    design = design or build_design(data, grid, cfg.random_columns)
    path = SelectionPath(lambda0_grid=lambda0_seq, lambda1_grid=lambda1_seq)

    def visit(stage: int, index: int, lambda0: float, lambda1: float, warm: Optional[FitResult]) -> PathEntry:
        fit = fit_mcecm(
            data, grid, lambda0, lambda1, r, cfg,
            warm_start=warm.params if warm else None,
            warm_samples=warm.samples_final if warm else None,
            stream=(stage, index),
            design=design,
            step_size=warm.step_size if warm else None,
        )
        if path.reference_samples is None:
            path.reference_samples = fit.samples_final
        value = bic_icq(fit, path.reference_samples, design)
        if not np.isfinite(value):
            raise NonFiniteObjectiveError(f"BIC-ICQ is not finite at lambda0={lambda0:.4g}, lambda1={lambda1:.4g}.")
        entry = PathEntry(stage=stage, lambda0=float(lambda0), lambda1=float(lambda1), bic_icq=value, fit=fit)
        path.entries.append(entry)
        logger.info(f"Stage {stage} fit {index + 1}: lambda0={lambda0:.4g}, lambda1={lambda1:.4g}, "
                    f"BIC-ICQ={value:.3f}")
        return entry

    warm = None
    for index, lambda1 in enumerate(lambda1_seq):
        warm = visit(1, index, lambda0_seq[0], lambda1, warm).fit
    stage_one = path.stage(1)
    best_one = min(range(len(stage_one)), key=lambda i: stage_one[i].bic_icq)
    path.lambda1_opt = stage_one[best_one].lambda1
    logger.info(f"Stage 1 selected lambda1_opt={path.lambda1_opt:.4g}")

    warm = stage_one[best_one].fit
    offset = len(path.entries)
    for index, lambda0 in enumerate(lambda0_seq):
        warm = visit(2, index, lambda0, path.lambda1_opt, warm).fit
    stage_two = path.stage(2)
    best_two = min(range(len(stage_two)), key=lambda i: stage_two[i].bic_icq)
    path.best_index = offset + best_two
    logger.info(f"Best model: lambda0={path.best.lambda0:.4g}, lambda1={path.best.lambda1:.4g}, "
                f"BIC-ICQ={path.best.bic_icq:.3f}")
    return path
