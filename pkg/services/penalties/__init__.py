from .base import Penalty, Piece
from .implementations import LassoPenalty, MCPPenalty, SCADPenalty
from .penalty_kernel import get_penalty, penalty_value, prox_scalar, prox_group, lambda_max_scale

__all__ = [
    'Penalty',
    'LassoPenalty',
    'MCPPenalty',
    'SCADPenalty',
    'get_penalty',
    'penalty_value',
    'prox_scalar',
    'prox_group',
    'lambda_max_scale',
]
