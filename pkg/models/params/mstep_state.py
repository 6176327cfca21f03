from dataclasses import dataclass, field
from typing import List

from models.params.model_params import ModelParams


@dataclass
class MStepState:
    """Result of one M-step: final parameters, the carried step size and the penalized objective trace."""
    params: ModelParams
    step_size: float
    objective_trace: List[float] = field(default_factory=list)
    iterations: int = 0
    converged: bool = False

    @property
    def objective(self) -> float:
        return self.objective_trace[-1]
