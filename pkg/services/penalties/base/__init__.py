from .penalty import Penalty, Piece
