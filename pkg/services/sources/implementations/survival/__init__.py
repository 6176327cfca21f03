from .csv_survival_source import CSVSurvivalSource
from .piecewise_simulation_source import PiecewiseSimulationSource, simulate_dataset

__all__ = [
    'CSVSurvivalSource',
    'PiecewiseSimulationSource',
    'simulate_dataset',
]
