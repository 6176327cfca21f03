from .standard_pipeline import SurvivalAnalysisStandardPipeline
from .runs.standard.csv_to_fit import fit_from_csv
from .runs.standard.csv_to_selection import select_from_csv
from .runs.standard.csv_to_growth_ratio import estimate_r_from_csv

__all__ = [
    'SurvivalAnalysisStandardPipeline',
    'fit_from_csv',
    'select_from_csv',
    'estimate_r_from_csv',
]
