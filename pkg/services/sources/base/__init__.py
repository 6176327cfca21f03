from .survival_source import SurvivalSource
from .result_sink import ResultSink
