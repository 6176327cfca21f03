from typing import Optional
from pydantic import BaseModel, ConfigDict, model_validator

from app.errors import InvalidParameterValueError

DEFAULT_GAMMA = {"lasso": None, "mcp": 3.0, "scad": 3.7}


class PenaltyConfig(BaseModel):
    """
    Penalty family shared by the fixed effects (scalar form) and the loading rows (grouped form).
    """
    model_config = ConfigDict(frozen=True)

    kind: str = "mcp"                # lasso, mcp or scad
    gamma: Optional[float] = None    # concavity; defaults to 3 (mcp) or 3.7 (scad)
    pi: float = 1.0                  # elastic-net mixing, 1 = pure folded-concave penalty

    @model_validator(mode="before")
    @classmethod
    def fill_gamma(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            kind = data.get("kind", "mcp")
            if kind not in DEFAULT_GAMMA:
                raise InvalidParameterValueError(
                    f"Invalid penalty kind: '{kind}'. Expected one of: {list(DEFAULT_GAMMA)}."
                )
            if data.get("gamma") is None:
                data["gamma"] = DEFAULT_GAMMA[kind]
        return data

    @model_validator(mode="after")
    def check_ranges(self):
        if self.kind == "mcp" and not self.gamma > 1:
            raise InvalidParameterValueError(f"MCP needs gamma > 1, got {self.gamma}.")
        if self.kind == "scad" and not self.gamma > 2:
            raise InvalidParameterValueError(f"SCAD needs gamma > 2, got {self.gamma}.")
        if not 0 < self.pi <= 1:
            raise InvalidParameterValueError(f"Elastic-net mixing pi must lie in (0, 1], got {self.pi}.")
        return self
