from dataclasses import dataclass
from typing import Callable, Optional
import logging

import numpy as np

from app.errors import NonFiniteObjectiveError, StepSizeUnderflowError, InvalidParameterValueError
from models.configs import PenaltyConfig
from models.params import ModelParams, MStepState, PosteriorSamples
from models.survival import DesignMatrices
from services.optimizers.q_function import QFunction
from services.penalties import get_penalty


class _GroupBlock:
    """Per-group arrays of the random part: U = Z B A^T and E = exp(U), rows x M."""

    def __init__(self, rows: np.ndarray, random: np.ndarray, death: np.ndarray, draws: np.ndarray,
                 loadings: np.ndarray):
        self.rows = rows
        self.random = random
        self.death = death
        self.draws = draws
        self.norms = np.sum(draws ** 2, axis=1)
        self.set_part(random @ loadings @ draws.T)

    def set_part(self, part: np.ndarray):
        self.part = part
        with np.errstate(over="ignore"):
            self.exp_part = np.exp(part)


@dataclass
class MMOptimizer:
    """
    Majorization-minimization M-step for

        F(theta) = Q1(theta) / N + lambda0 sum_l P(|beta_l|) + lambda1 sum_t P(||b_t||).

    Each inner iteration updates every psi_tilde_j (unpenalized), then every beta_l (scalar prox),
    then every row b_t of B (group prox). A coordinate step uses the local curvature h of Q1 / N
    and a step multiplier c: the trial point minimizes the quadratic model g d + h d^2 / (2c) plus
    the penalty, and is kept once Q1 / N lies below that model. Otherwise c is halved; after a
    halving, c is also multiplied by ``step_decay``. c carries over between coordinates and calls.

    Attributes:
    ----------
    design : DesignMatrices
        Row-level design of the long-form data.
    penalty_config : PenaltyConfig
        Penalty family used for beta and the rows of B.
    lambda0, lambda1 : float
        Fixed- and random-effect penalty levels.
    pin_random : bool
        Keep B as given (no B updates).
    free_psi : np.ndarray, optional
        Boolean mask of psi_tilde entries to update; all by default.
    penalize_random_intercept : bool
        Whether the intercept row b_1 carries the group penalty.
    """
    design: DesignMatrices
    penalty_config: PenaltyConfig
    lambda0: float
    lambda1: float
    max_iter: int = 50
    tol: float = 1e-4
    backtrack: float = 0.5
    step_decay: float = 0.95
    min_step: float = 1e-10
    pin_random: bool = False
    free_psi: Optional[np.ndarray] = None
    penalize_random_intercept: bool = True

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        if not (self.lambda0 >= 0 and self.lambda1 >= 0):
            raise InvalidParameterValueError(f"Penalty levels must be nonnegative, got {self.lambda0}, {self.lambda1}.")
        self.penalty = get_penalty(self.penalty_config)
        self.n = float(self.design.n_subjects)

    def run(self, init: ModelParams, samples: Optional[PosteriorSamples], step_size: float) -> MStepState:
        if not step_size > 0:
            raise InvalidParameterValueError(f"The initial step size must be positive, got {step_size}.")
        self.q_function = QFunction(self.design, samples)
        self.q_function.check_params(init)

        self.params = init.copy()
        self.step_size = float(step_size)
        self.fixed = self.design.fixed_predictor(self.params.psi_tilde, self.params.beta)
        self.blocks = []
        if samples is not None:
            for k in self.design.present_groups():
                rows = self.design.group_rows[k]
                self.blocks.append(_GroupBlock(rows, self.design.random[rows], self.design.death[rows],
                                               samples.draws(k), self.params.loadings))
        self._refresh_reductions()

        trace = [self._objective()]
        if not np.isfinite(trace[0]):
            raise NonFiniteObjectiveError("The penalized objective is not finite at the M-step start.")

        free_psi = np.ones(self.params.n_intervals, dtype=bool) if self.free_psi is None \
            else np.asarray(self.free_psi, dtype=bool)
        converged = False
        iterations = 0
        for iterations in range(1, self.max_iter + 1):
            change = 0.0
            self._refresh_reductions()
            self._scores = None
            for j in np.flatnonzero(free_psi):
                change = max(change, self._update_fixed(self.design.dummies[:, j], "psi_tilde", j, None))
            for l in range(self.params.p):
                change = max(change, self._update_fixed(self.design.covariates[:, l], "beta", l, self.lambda0))
            if self.blocks and not self.pin_random:
                for t in range(self.params.q):
                    penalized = t > 0 or self.penalize_random_intercept
                    change = max(change, self._update_row(t, self.lambda1 if penalized else 0.0))

            trace.append(self._objective())
            self.logger.debug(f"M-step iteration {iterations}: objective {trace[-1]:.8f}, "
                              f"max change {change:.2e}, step {self.step_size:.3e}")
            if change < self.tol:
                converged = True
                break

        return MStepState(params=self.params, step_size=self.step_size, objective_trace=trace,
                          iterations=iterations, converged=converged)

    def _refresh_reductions(self):
        n_rows = self.design.long_form.n_rows
        self.weight, self.shift = np.ones(n_rows), np.zeros(n_rows)
        for block in self.blocks:
            self.weight[block.rows] = block.exp_part.mean(axis=1)
            self.shift[block.rows] = block.part.mean(axis=1)

    def _q(self, fixed: np.ndarray) -> float:
        with np.errstate(over="ignore", invalid="ignore"):
            return float(-np.sum(self.design.death * (fixed + self.shift) - np.exp(fixed) * self.weight)) / self.n

    def _q_random(self, parts) -> float:
        total = 0.0
        with np.errstate(over="ignore", invalid="ignore"):
            for block, (part, exp_part) in zip(self.blocks, parts):
                fixed = self.fixed[block.rows]
                total -= np.sum(block.death * (fixed + part.mean(axis=1)) - np.exp(fixed) * exp_part.mean(axis=1))
        return float(total) / self.n

    def _objective(self) -> float:
        q = self._q(self.fixed) if not self.blocks else self._q_random(
            [(block.part, block.exp_part) for block in self.blocks])
        norms = np.linalg.norm(self.params.loadings, axis=1)
        if not self.penalize_random_intercept:
            norms = norms[1:]
        penalty = float(np.sum(self.penalty.value(np.abs(self.params.beta), self.lambda0))) if self.params.p else 0.0
        return q + penalty + float(np.sum(self.penalty.value(norms, self.lambda1)))

    def _line_search(self, current, gradient, curvature: float, proximal: Callable, trial: Callable, q_old: float):
        """Returns (new value, new Q1 / N) or (None, q_old) when the coordinate does not move."""
        backtracked = False
        while True:
            step = self.step_size / curvature
            candidate = proximal(current - step * gradient, step)
            delta = candidate - current
            if not np.any(delta):
                return None, q_old
            q_new = trial(delta)
            bound = q_old + float(np.sum(gradient * delta)) + curvature * float(np.sum(delta ** 2)) / (2.0 * self.step_size)
            if np.isfinite(q_new) and q_new <= bound + 1e-12 * max(1.0, abs(q_old)):
                break
            self.step_size *= self.backtrack
            backtracked = True
            if self.step_size < self.min_step:
                raise StepSizeUnderflowError(self.step_size, self.min_step)
        if backtracked:
            self.step_size *= self.step_decay
        return candidate, q_new

    def _update_fixed(self, column: np.ndarray, name: str, index: int, lam: Optional[float]) -> float:
        with np.errstate(over="ignore"):
            mean = np.exp(self.fixed) * self.weight
        curvature = float(column ** 2 @ mean) / self.n
        if not curvature > 0:
            return 0.0
        gradient = -float(column @ (self.design.death - mean)) / self.n
        q_old = self._q(self.fixed)
        if not np.isfinite(q_old):
            raise NonFiniteObjectiveError(f"Q1 is not finite before updating {name}[{index}].")

        if lam is None:
            def proximal(z, step):
                return z
        else:
            def proximal(z, step):
                return self.penalty.prox(z, step, lam)

        values = getattr(self.params, name)
        new, _ = self._line_search(values[index], gradient, curvature, proximal,
                                   lambda delta: self._q(self.fixed + delta * column), q_old)
        if new is None:
            return 0.0
        change = abs(new - values[index])
        self.fixed = self.fixed + (new - values[index]) * column
        values[index] = new
        return change

    def _row_scores(self):
        """Per block: (d - mu) A (rows x r) and mu ||alpha||^2 (rows); valid until B or the fixed part moves."""
        if self._scores is None:
            self._scores = []
            with np.errstate(over="ignore"):
                for block in self.blocks:
                    mean = np.exp(self.fixed[block.rows])[:, None] * block.exp_part
                    self._scores.append(((block.death[:, None] - mean) @ block.draws, mean @ block.norms))
        return self._scores

    def _update_row(self, t: int, lam: float) -> float:
        m = self.blocks[0].draws.shape[0]
        gradient = np.zeros(self.params.r)
        curvature = 0.0
        for block, (residual, spread) in zip(self.blocks, self._row_scores()):
            column = block.random[:, t]
            gradient -= column @ residual
            curvature += float((column ** 2) @ spread)
        gradient /= m * self.n
        curvature /= m * self.n
        if not curvature > 0:
            return 0.0
        q_old = self._q_random([(block.part, block.exp_part) for block in self.blocks])
        if not np.isfinite(q_old):
            raise NonFiniteObjectiveError(f"Q1 is not finite before updating loading row {t}.")

        trial_parts = {}

        def trial(delta):
            parts = []
            for block in self.blocks:
                part = block.part + np.outer(block.random[:, t], block.draws @ delta)
                with np.errstate(over="ignore"):
                    parts.append((part, np.exp(part)))
            trial_parts["parts"] = parts
            return self._q_random(parts)

        current = self.params.loadings[t].copy()
        new, _ = self._line_search(current, gradient, curvature,
                                   lambda z, step: self.penalty.prox_group(z, step, lam), trial, q_old)
        if new is None:
            return 0.0
        for block, (part, exp_part) in zip(self.blocks, trial_parts["parts"]):
            block.part, block.exp_part = part, exp_part
        self._scores = None
        self.params.loadings[t] = new
        return float(np.max(np.abs(new - current)))


def mstep(init: ModelParams, samples: Optional[PosteriorSamples], design: DesignMatrices, lambda0: float,
          lambda1: float, cfg: PenaltyConfig, c_init: float = 1.0, **options) -> MStepState:
    """Runs one M-step from ``init`` under fixed posterior samples."""
    return MMOptimizer(design=design, penalty_config=cfg, lambda0=lambda0, lambda1=lambda1, **options) \
        .run(init, samples, c_init)
