import warnings

import numpy as np
import pytest

from app.errors import GroupTooSmallError, InvalidParameterValueError, RankDeficientError
from app.warnings import SparseIntervalWarning
from models.configs import FitConfig
from models.survival import IntervalGrid, SurvivalDataset
from services.selection import (
    default_max_factors,
    growth_ratio_from_eigenvalues,
    growth_ratio_r,
    pseudo_random_effects,
)
from services.transformers import compute_cutpoints
from tests.utils import make_dataset, print_values


def test_growth_ratio_from_eigenvalues():
    result = growth_ratio_from_eigenvalues([8.0, 4.0, 1.0, 0.5], max_factors=2)
    np.testing.assert_allclose(result.tail_sums[:3], [5.5, 1.5, 0.5])
    np.testing.assert_allclose(result.ratios, [0.691, 1.183], atol=1e-3)
    assert result.r_hat == 2


def test_growth_ratio_sorts_eigenvalues():
    assert growth_ratio_from_eigenvalues([0.5, 4.0, 8.0, 1.0], max_factors=2).r_hat == 2


def test_vanishing_tail_is_rank_deficient():
    with pytest.raises(RankDeficientError):
        growth_ratio_from_eigenvalues([3.0, 1.0, 0.0, 0.0], max_factors=2)


@pytest.mark.parametrize("eigenvalues, max_factors", [([3.0, 2.0], 2), ([3.0, 2.0, 1.0], 0)])
def test_growth_ratio_rejects_bad_arguments(eigenvalues, max_factors):
    with pytest.raises(InvalidParameterValueError):
        growth_ratio_from_eigenvalues(eigenvalues, max_factors)


def test_default_max_factors():
    assert default_max_factors(6, 30) == 4
    assert default_max_factors(30, 30) == 10
    assert default_max_factors(2, 30) == 1


def test_rank_two_matrix_recovers_two_factors():
    for seed in range(20):
        rng = np.random.default_rng(seed)
        G = rng.standard_normal((20, 2)) @ rng.standard_normal((2, 10)) + 1e-8 * rng.standard_normal((20, 10))
        assert growth_ratio_r(G).r_hat == 2


def test_growth_ratio_is_scale_invariant():
    rng = np.random.default_rng(3)
    G = rng.standard_normal((6, 3)) @ rng.standard_normal((3, 25)) + 0.05 * rng.standard_normal((6, 25))
    base, scaled = growth_ratio_r(G), growth_ratio_r(7.5 * G)
    assert base.r_hat == scaled.r_hat
    np.testing.assert_allclose(base.ratios, scaled.ratios, rtol=1e-8)


def test_pseudo_effects_are_centered(print_results):
    data = make_dataset(n_subjects=200, n_groups=5, n_predictors=3, beta=[0.5, 0.0, -0.4], seed=8)
    grid = compute_cutpoints(data.times, data.status, 3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SparseIntervalWarning)
        pseudo = pseudo_random_effects(data, grid, FitConfig())
    print_values("G", pseudo.G, print_results)
    assert pseudo.G.shape == (4, 5)
    np.testing.assert_allclose(pseudo.G.mean(axis=1), 0.0, atol=1e-12)
    assert pseudo.groups == data.group_labels


def _sparse_dataset(events_in_c):
    rng = np.random.default_rng(0)
    groups = ["a"] * 6 + ["b"] * 6 + ["c"] * 4
    times = [0.4, 0.8, 1.3, 1.7, 2.5, 3.0] * 2 + [0.5, 0.6, 1.5, 2.0]
    status = [1, 1, 1, 1, 0, 1] * 2 + ([1, 1, 0, 0] if events_in_c else [0, 0, 0, 0])
    return SurvivalDataset.build(groups=groups, times=times, status=status, covariates=rng.standard_normal((16, 1)))


def test_sparse_group_keeps_pooled_shape():
    data = _sparse_dataset(events_in_c=True)
    with pytest.warns(SparseIntervalWarning):
        pseudo = pseudo_random_effects(data, IntervalGrid([1.0]), FitConfig())
    assert pseudo.fallback_groups == ("c",)


def test_group_without_events_is_rejected():
    data = _sparse_dataset(events_in_c=False)
    with pytest.raises(GroupTooSmallError):
        pseudo_random_effects(data, IntervalGrid([1.0]), FitConfig())


def test_identical_groups_give_zero_pseudo_effects():
    base = make_dataset(n_subjects=40, n_groups=2, n_predictors=2, beta=[0.6, -0.3], seed=12)
    copies = 3
    data = SurvivalDataset.build(
        groups=np.repeat(["a", "b", "c"], base.n_subjects),
        times=np.tile(base.times, copies),
        status=np.tile(base.status, copies),
        covariates=np.tile(base.covariates, (copies, 1)),
    )
    grid = compute_cutpoints(base.times, base.status, 3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SparseIntervalWarning)
        pseudo = pseudo_random_effects(data, grid, FitConfig())
    assert pseudo.G.shape == (3, copies)
    np.testing.assert_allclose(pseudo.G, 0.0, atol=1e-10)


def test_two_groups_give_mirrored_columns():
    data = make_dataset(n_subjects=120, n_groups=2, n_predictors=2, beta=[0.5, 0.2], seed=14)
    grid = compute_cutpoints(data.times, data.status, 3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SparseIntervalWarning)
        pseudo = pseudo_random_effects(data, grid, FitConfig())
    assert pseudo.G.shape == (3, 2)
    np.testing.assert_allclose(pseudo.G[:, 0], -pseudo.G[:, 1], atol=1e-12)
    assert np.linalg.norm(pseudo.G[:, 0]) > 0
