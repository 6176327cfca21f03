from .concordance import c_index
from .splits import train_test_split_stratified
from .selection_metrics import evaluate_selection
from .replicates import run_replicate, run_replicates, replicate_seed, summarize_replicates

__all__ = [
    'c_index',
    'train_test_split_stratified',
    'evaluate_selection',
    'run_replicate',
    'run_replicates',
    'replicate_seed',
    'summarize_replicates',
]
