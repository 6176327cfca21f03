from .lasso import LassoPenalty
from .mcp import MCPPenalty
from .scad import SCADPenalty

__all__ = [
    'LassoPenalty',
    'MCPPenalty',
    'SCADPenalty',
]
