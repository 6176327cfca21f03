from .survival_dataset import SurvivalDataset, REQUIRED_COLUMNS
from .interval_grid import IntervalGrid
from .long_form_dataset import LongFormDataset
from .design_matrices import DesignMatrices
