from typing import Optional
from pydantic import BaseModel, Field


class SelectionMetrics(BaseModel):
    """Selection accuracy of one simulated replicate (percentages in [0, 100])."""
    tp_fixed: float = Field(ge=0, le=100)
    fp_fixed: float = Field(ge=0, le=100)
    tp_random: float = Field(ge=0, le=100)
    fp_random: float = Field(ge=0, le=100)
    mean_abs_dev: float = Field(ge=0)
    frob_std: float = Field(ge=0)
    censor_rate: float = Field(ge=0, le=1)
    runtime: float = Field(ge=0)          # wall-clock hours of the selection run
    c_index: Optional[float] = None
    r_hat: Optional[int] = None
