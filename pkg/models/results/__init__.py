from .fit_result import FitResult
from .selection_path import PathEntry, SelectionPath
from .pseudo_effects import PseudoEffectsMatrix
from .growth_ratio_result import GrowthRatioResult
from .selection_metrics import SelectionMetrics
from .benchmark_report import BenchmarkReport
