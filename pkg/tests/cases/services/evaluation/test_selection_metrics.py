import numpy as np
import pytest

from app.errors import DimensionMismatchError
from models.configs import SimConfig
from models.params import GroupChain, ModelParams, PosteriorSamples
from models.results import FitResult
from models.survival import IntervalGrid
from services.evaluation import evaluate_selection
from tests.utils import make_dataset


def _truth(beta, loadings):
    return SimConfig(n_subjects=10, n_groups=2, n_predictors=len(beta), beta_true=beta, loadings=loadings,
                     psi_star=[0.0, 0.0], sim_cutpoints=[1.0])


def _fit(beta, loadings, random_columns):
    loadings = np.asarray(loadings, dtype=float)
    chain = GroupChain(draws=np.zeros((2, loadings.shape[1])), acceptance=np.zeros(loadings.shape[1]),
                       log_scales=np.zeros(loadings.shape[1]))
    return FitResult(
        params=ModelParams(psi_tilde=np.zeros(2), beta=beta, loadings=loadings),
        q1_at_solution=0.0,
        samples_final=PosteriorSamples((chain,)),
        em_iterations=1,
        converged=True,
        lambda0=0.1,
        lambda1=0.1,
        step_size=1.0,
        objective=0.0,
        grid=IntervalGrid([1.0]),
        random_columns=tuple(random_columns),
    )


def test_selection_rates():
    truth = _truth([1.0] * 5 + [0.0] * 5, [[1.0]] * 6 + [[0.0]] * 5)
    beta = np.zeros(10)
    beta[[0, 1, 2, 5]] = 1.0
    loadings = np.zeros((11, 1))
    loadings[[0, 1, 2]] = 1.0
    metrics = evaluate_selection(_fit(beta, loadings, range(10)), truth)
    assert metrics.tp_fixed == pytest.approx(60.0)
    assert metrics.fp_fixed == pytest.approx(20.0)
    assert metrics.tp_random == pytest.approx(50.0)
    assert metrics.fp_random == pytest.approx(0.0)
    assert metrics.c_index is None


def test_deviation_and_frobenius_norm():
    truth = _truth([0.5, 0.0], [[1.0], [0.0], [0.0]])
    metrics = evaluate_selection(_fit([0.7, 0.0], [[np.sqrt(2.0)], [0.0], [0.0]], (0, 1)), truth)
    assert metrics.mean_abs_dev == pytest.approx(0.2)
    assert metrics.frob_std == pytest.approx(1.0)
    assert metrics.tp_fixed == 100.0
    assert metrics.fp_fixed == 0.0


def test_frobenius_norm_is_divided_by_selected_rows():
    truth = _truth([0.5, 0.5], [[1.0], [1.0], [0.0]])
    # Sigma-hat = 0 against an all-ones 2 x 2 block: norm 2, no rows selected
    assert evaluate_selection(_fit([0.5, 0.5], np.zeros((3, 1)), (0, 1)), truth).frob_std == pytest.approx(2.0)
    # Sigma-hat = 4 * ones on the same block: norm 6 over 2 selected rows
    metrics = evaluate_selection(_fit([0.5, 0.5], [[2.0], [2.0], [0.0]], (0, 1)), truth)
    assert metrics.frob_std == pytest.approx(3.0)


def test_empty_true_sets():
    truth = _truth([0.0, 0.0], [[0.0], [0.0], [0.0]])
    metrics = evaluate_selection(_fit([0.3, 0.0], np.zeros((3, 1)), (0, 1)), truth)
    assert metrics.tp_fixed == 100.0
    assert metrics.tp_random == 100.0
    assert metrics.fp_fixed == pytest.approx(50.0)
    assert metrics.mean_abs_dev == pytest.approx(0.15)


def test_random_rows_follow_random_columns():
    truth = _truth([0.0, 0.0, 1.0], [[1.0], [0.0], [0.0], [1.0]])
    metrics = evaluate_selection(_fit([0.0, 0.0, 1.0], [[0.0], [1.0]], (2,)), truth)
    assert metrics.tp_random == pytest.approx(50.0)
    assert metrics.fp_random == pytest.approx(0.0)


def test_metrics_with_data():
    data = make_dataset(n_subjects=50, n_groups=2, n_predictors=2, beta=[1.0, 0.0])
    truth = _truth([1.0, 0.0], [[1.0], [0.0], [0.0]])
    metrics = evaluate_selection(_fit([1.0, 0.0], [[1.0], [0.0], [0.0]], (0, 1)), truth, data=data,
                                 runtime=0.5, r_hat=1)
    assert metrics.censor_rate == pytest.approx(1.0 - data.status.mean())
    assert 0.5 < metrics.c_index <= 1.0
    assert metrics.runtime == 0.5
    assert metrics.r_hat == 1


def test_dimension_checks():
    truth = _truth([1.0, 0.0], [[1.0], [0.0], [0.0]])
    with pytest.raises(DimensionMismatchError):
        evaluate_selection(_fit([1.0, 0.0, 0.0], np.zeros((4, 1)), (0, 1, 2)), truth)
    with pytest.raises(DimensionMismatchError):
        evaluate_selection(_fit([1.0, 0.0], np.zeros((3, 1)), (0,)), truth)
