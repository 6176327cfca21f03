from typing import Tuple

import numpy as np

from app.errors import InvalidParameterValueError
from app.utils import spawn_generator
from models.survival import SurvivalDataset


def train_test_split_stratified(data: SurvivalDataset, frac: float = 0.8,
                                seed: int = 20240101) -> Tuple[SurvivalDataset, SurvivalDataset]:
    """
    Splits subjects into training and held-out sets, drawing ``frac`` of every (group, status)
    stratum into training. Strata of one subject go to training.
    """
    if not 0 < frac < 1:
        raise InvalidParameterValueError(f"frac must lie in (0, 1), got {frac}.")
    rng = spawn_generator(seed)
    train, test = [], []
    strata = data.groups * 2 + data.status
    for stratum in np.unique(strata):
        members = rng.permutation(np.flatnonzero(strata == stratum))
        cut = max(1, int(round(frac * members.size)))
        train.append(members[:cut])
        test.append(members[cut:])
    train_index = np.sort(np.concatenate(train))
    test_index = np.sort(np.concatenate(test))
    return data.take(train_index), data.take(test_index, min_groups=1)
