import math
from typing import List, Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.errors import InvalidParameterValueError
from app.settings import get_settings
from app.utils import ConfigLoader
from models.configs.penalty_config import PenaltyConfig


class FitConfig(BaseModel):
    """
    Settings of one MCECM fit and of the searches built from it.
    """
    model_config = ConfigDict(frozen=True)

    n_intervals: int = 8                 # J
    max_em: int = 25                     # EM iteration cap
    max_mstep: int = 50                  # inner M-step iteration cap
    em_tol: float = 1e-3                 # max abs change of nonzero parameters between EM iterations
    consecutive_required: int = 2        # convergence checks that must pass in a row
    mstep_tol: float = 1e-4              # max abs change within an M-step
    init_max_iter: int = 1000            # fixed-effects-only fits
    init_tol: float = 1e-8
    burnin: int = 250
    m_base: int = 250                    # M(s) = min(m_step * ceil(s / m_every) + m_base, m_cap)
    m_step: int = 250
    m_every: int = 5
    m_cap: int = 2500
    target_accept: float = 0.44
    adapt_batch: int = 50
    step_size_init: float = 1.0
    backtrack: float = 0.5
    step_decay: float = 0.95
    min_step: float = 1e-10
    screen: bool = True
    penalize_random_intercept: bool = True
    random_columns: Optional[List[int]] = None
    num_threads: int = 1
    seed: int = 20240101
    penalty: PenaltyConfig = Field(default_factory=PenaltyConfig)

    @model_validator(mode="after")
    def check_ranges(self):
        counts = ("n_intervals", "max_em", "max_mstep", "consecutive_required", "init_max_iter",
                  "m_base", "m_every", "m_cap", "adapt_batch", "num_threads")
        for name in counts:
            if getattr(self, name) < 1:
                raise InvalidParameterValueError(f"{name} must be a positive count, got {getattr(self, name)}.")
        if self.n_intervals < 2:
            raise InvalidParameterValueError(f"At least 2 intervals are required, got {self.n_intervals}.")
        if self.burnin < 0 or self.m_step < 0:
            raise InvalidParameterValueError("burnin and m_step must be nonnegative.")
        for name in ("em_tol", "mstep_tol", "init_tol", "step_size_init", "min_step"):
            if not getattr(self, name) > 0:
                raise InvalidParameterValueError(f"{name} must be positive, got {getattr(self, name)}.")
        if not 0 < self.backtrack < 1 or not 0 < self.step_decay <= 1:
            raise InvalidParameterValueError("backtrack must lie in (0, 1) and step_decay in (0, 1].")
        if not 0 < self.target_accept < 1:
            raise InvalidParameterValueError(f"target_accept must lie in (0, 1), got {self.target_accept}.")
        return self

    def sample_size(self, em_iteration: int) -> int:
        """E-step sample size M(s) for the 1-based EM iteration s."""
        return int(min(self.m_step * math.ceil(em_iteration / self.m_every) + self.m_base, self.m_cap))

    @classmethod
    def from_options(cls, env: str = "PROD", intervals: int = None, penalty: str = "mcp", gamma: float = None,
                     pi: float = 1.0, seed: int = None, max_em: int = None, max_mstep: int = None,
                     burnin: int = None, threads: int = None, random_columns: Optional[List[int]] = None,
                     presets_path: Optional[str] = None) -> "FitConfig":
        """
        Builds a configuration from command-line style options; missing options fall back to the
        settings profile of ``env`` and the sample-size schedule to ``config/presets.yaml``.
        """
        settings = get_settings(env=env)
        schedule = ConfigLoader.load_section("m_schedule", presets_path or settings.PRESETS_PATH)
        options = {
            "n_intervals": intervals or settings.DEFAULT_INTERVALS,
            "seed": settings.DEFAULT_SEED if seed is None else seed,
            "burnin": settings.DEFAULT_BURNIN if burnin is None else burnin,
            "num_threads": threads or settings.NUM_THREADS,
            "random_columns": random_columns,
            "m_base": schedule["base"],
            "m_step": schedule["step"],
            "m_every": schedule["every"],
            "m_cap": schedule["cap"],
            "penalty": PenaltyConfig(kind=penalty, gamma=gamma, pi=pi),
        }
        if max_em:
            options["max_em"] = max_em
        if max_mstep:
            options["max_mstep"] = max_mstep
        return cls(**options)
