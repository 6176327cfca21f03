import numpy as np
import pytest

from app.errors import InvalidParameterValueError
from services.evaluation import train_test_split_stratified
from tests.utils import make_dataset


@pytest.fixture
def data():
    return make_dataset(n_subjects=120, n_groups=4, n_predictors=2, seed=12)


def test_split_partitions_subjects(data):
    train, test = train_test_split_stratified(data, frac=0.75, seed=1)
    assert train.n_subjects + test.n_subjects == data.n_subjects
    np.testing.assert_array_equal(np.sort(np.concatenate([train.times, test.times])), np.sort(data.times))


def test_split_keeps_strata_proportions(data):
    train, _ = train_test_split_stratified(data, frac=0.75, seed=1)
    for code in range(data.n_groups):
        for status in (0, 1):
            total = np.sum((data.groups == code) & (data.status == status))
            kept = np.sum((train.groups == code) & (train.status == status))
            if total:
                assert kept == max(1, int(round(0.75 * total)))


def test_split_is_reproducible(data):
    first, _ = train_test_split_stratified(data, seed=3)
    second, _ = train_test_split_stratified(data, seed=3)
    other, _ = train_test_split_stratified(data, seed=4)
    np.testing.assert_array_equal(first.times, second.times)
    assert not np.array_equal(first.times, other.times)


@pytest.mark.parametrize("frac", [0.0, 1.0, 1.5])
def test_split_rejects_bad_fraction(data, frac):
    with pytest.raises(InvalidParameterValueError):
        train_test_split_stratified(data, frac=frac)
