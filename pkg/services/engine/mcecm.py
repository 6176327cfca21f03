from typing import Optional, Sequence, Tuple
import logging
import warnings

import numpy as np

from app.errors import DimensionMismatchError, InvalidParameterValueError
from app.warnings import NonConvergenceWarning
from models.configs import FitConfig, PenaltyConfig
from models.params import ModelParams, PosteriorSamples
from models.results import FitResult
from models.survival import DesignMatrices, IntervalGrid, SurvivalDataset
from services.optimizers import MMOptimizer, QFunction
from services.samplers import AdaptiveRandomWalkSampler, run_estep
from services.transformers import expand_long_form

logger = logging.getLogger(__name__)


def build_design(data: SurvivalDataset, grid: IntervalGrid, random_columns: Optional[Sequence[int]] = None) -> DesignMatrices:
    return DesignMatrices(expand_long_form(data, grid), random_columns)


def closed_form_baseline(design: DesignMatrices, rows: Optional[np.ndarray] = None, event_floor: float = 0.5) -> np.ndarray:
    """
    psi_tilde of the intercept-only model, psi_j = log(events_j / exposure_j).
    Intervals without events use ``event_floor`` events; intervals without exposure copy the first one.
    """
    events = design.long_form.events_per_interval(rows)
    exposure = design.long_form.exposure_per_interval(rows)
    psi = np.full(design.n_intervals, np.nan)
    at_risk = exposure > 0
    psi[at_risk] = np.log(np.maximum(events[at_risk], event_floor) / exposure[at_risk])
    psi = np.where(np.isnan(psi), psi[0], psi)
    return np.concatenate(([psi[0]], psi[1:] - psi[0]))


def init_fixed_effects(design: DesignMatrices, lambda0: float, cfg: PenaltyConfig,
                       fit_config: Optional[FitConfig] = None, psi_start: Optional[np.ndarray] = None,
                       free_psi: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Penalized fixed-effects-only fit (all loading rows pinned at zero), started from the
    closed-form baseline hazard and beta = 0. Returns (psi_tilde, beta).
    """
    fit_config = fit_config or FitConfig(penalty=cfg)
    start = ModelParams(
        psi_tilde=closed_form_baseline(design) if psi_start is None else psi_start,
        beta=np.zeros(design.p),
        loadings=np.zeros((design.q, 1)),
    )
    optimizer = MMOptimizer(
        design=design,
        penalty_config=cfg,
        lambda0=lambda0,
        lambda1=0.0,
        max_iter=fit_config.init_max_iter,
        tol=fit_config.init_tol,
        backtrack=fit_config.backtrack,
        step_decay=fit_config.step_decay,
        min_step=fit_config.min_step,
        pin_random=True,
        free_psi=free_psi,
    )
    state = optimizer.run(start, None, fit_config.step_size_init)
    logger.debug(f"Fixed-effects fit at lambda0={lambda0:.4g}: {len(state.params.selected_fixed())} nonzero, "
                 f"{state.iterations} iterations")
    return state.params.psi_tilde, state.params.beta


def init_theta(psi_tilde: np.ndarray, beta: np.ndarray, r: int, q: int, screen: bool = True,
               random_columns: Optional[Sequence[int]] = None) -> ModelParams:
    """
    Starting parameters: B[t, m] = 0.1 + 0.05 ((t + m) mod 2) with 0-based t and m. With ``screen``,
    rows of predictors whose beta is zero start at zero; the intercept row always starts nonzero.
    """
    if r < 1 or q < 1:
        raise InvalidParameterValueError(f"Need r >= 1 and q >= 1, got r={r}, q={q}.")
    beta = np.asarray(beta, dtype=np.float64)
    columns = list(range(beta.size)) if random_columns is None else list(random_columns)
    if len(columns) != q - 1:
        raise DimensionMismatchError(f"{len(columns)} random columns do not give q = {q} loading rows.")
    t, m = np.indices((q, r))
    loadings = 0.1 + 0.05 * ((t + m) % 2)
    if screen:
        for row, column in enumerate(columns, start=1):
            if beta[column] == 0:
                loadings[row] = 0.0
    return ModelParams(psi_tilde=np.array(psi_tilde, dtype=np.float64), beta=beta.copy(), loadings=loadings)


def fit_mcecm(data: SurvivalDataset, grid: IntervalGrid, lambda0: float, lambda1: float, r: int, cfg: FitConfig,
              warm_start: Optional[ModelParams] = None, warm_samples: Optional[PosteriorSamples] = None,
              stream: Sequence[int] = (), design: Optional[DesignMatrices] = None,
              step_size: Optional[float] = None) -> FitResult:
    """
    Alternates E-steps (per-group chains) and M-steps at one (lambda0, lambda1) pair until the
    largest change of the active parameters stays below ``em_tol`` on ``consecutive_required``
    checks in a row, or ``max_em`` iterations are used.

    ``stream`` identifies the fit inside a larger run; together with ``cfg.seed`` it fixes all draws.
    """
    design = design or build_design(data, grid, cfg.random_columns)
    if warm_start is not None:
        params = warm_start.copy()
        params.check_dimensions(design.n_intervals, design.p, design.q)
        if params.r != r:
            raise DimensionMismatchError(f"Warm start has r = {params.r}, requested r = {r}.")
    else:
        psi_tilde, beta = init_fixed_effects(design, lambda0, cfg.penalty, cfg)
        params = init_theta(psi_tilde, beta, r, design.q, cfg.screen, design.random_columns)

    sampler = AdaptiveRandomWalkSampler(target_accept=cfg.target_accept, adapt_batch=cfg.adapt_batch)
    step_size = step_size or cfg.step_size_init
    samples = warm_samples
    state = None
    consecutive = 0
    converged = False
    iteration = 0
    logger.info(f"MCECM fit at lambda0={lambda0:.4g}, lambda1={lambda1:.4g}, r={r}, stream={tuple(stream)}")

    for iteration in range(1, cfg.max_em + 1):
        samples = run_estep(design, params, cfg.sample_size(iteration), cfg.burnin, cfg.seed,
                            stream=(*stream, iteration), previous=samples, sampler=sampler,
                            num_threads=cfg.num_threads)
        optimizer = MMOptimizer(
            design=design,
            penalty_config=cfg.penalty,
            lambda0=lambda0,
            lambda1=lambda1,
            max_iter=cfg.max_mstep,
            tol=cfg.mstep_tol,
            backtrack=cfg.backtrack,
            step_decay=cfg.step_decay,
            min_step=cfg.min_step,
            penalize_random_intercept=cfg.penalize_random_intercept,
        )
        state = optimizer.run(params, samples, step_size)
        change = state.params.max_change(params)
        params, step_size = state.params, state.step_size
        consecutive = consecutive + 1 if change < cfg.em_tol else 0
        logger.debug(f"EM iteration {iteration}: M={cfg.sample_size(iteration)}, change {change:.2e}, "
                     f"objective {state.objective:.6f}, selected fixed {len(params.selected_fixed())}, "
                     f"random {len(params.selected_random())}")
        if consecutive >= cfg.consecutive_required:
            converged = True
            break

    if not converged:
        warnings.warn(NonConvergenceWarning(
            f"EM stopped after {cfg.max_em} iterations at lambda0={lambda0:.4g}, lambda1={lambda1:.4g}."
        ), stacklevel=2)

    logger.info(f"Fit finished after {iteration} EM iterations (converged={converged}): "
                f"{len(params.selected_fixed())} fixed and {len(params.selected_random())} random effects")
    return FitResult(
        params=params,
        q1_at_solution=QFunction(design, samples).value(params),
        samples_final=samples,
        em_iterations=iteration,
        converged=converged,
        lambda0=float(lambda0),
        lambda1=float(lambda1),
        step_size=step_size,
        objective=state.objective,
        grid=grid,
        random_columns=tuple(design.random_columns),
    )
