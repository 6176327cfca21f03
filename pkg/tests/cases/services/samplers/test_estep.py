import numpy as np
import pytest

from app.warnings import ExcessiveProcessesWarning
from models.params import ModelParams
from services.engine import build_design, closed_form_baseline
from services.samplers import run_estep
from services.transformers import compute_cutpoints
from tests.utils import make_dataset


@pytest.fixture
def setup():
    data = make_dataset(n_subjects=60, n_groups=4, n_predictors=2, seed=9)
    grid = compute_cutpoints(data.times, data.status, 3)
    design = build_design(data, grid)
    params = ModelParams(psi_tilde=closed_form_baseline(design), beta=np.zeros(2),
                         loadings=np.full((3, 2), 0.2))
    return design, params


def test_estep_is_reproducible(setup):
    design, params = setup
    first = run_estep(design, params, 50, 50, seed=11, stream=(1, 2))
    second = run_estep(design, params, 50, 50, seed=11, stream=(1, 2))
    for k in design.present_groups():
        np.testing.assert_array_equal(first.draws(k), second.draws(k))


def test_threads_do_not_change_draws(setup):
    design, params = setup
    sequential = run_estep(design, params, 40, 40, seed=5)
    threaded = run_estep(design, params, 40, 40, seed=5, num_threads=2)
    for k in design.present_groups():
        np.testing.assert_array_equal(sequential.draws(k), threaded.draws(k))


def test_streams_are_independent(setup):
    design, params = setup
    first = run_estep(design, params, 40, 40, seed=5, stream=(1,))
    second = run_estep(design, params, 40, 40, seed=5, stream=(2,))
    assert not np.array_equal(first.draws(0), second.draws(0))


def test_samples_layout(setup):
    design, params = setup
    samples = run_estep(design, params, 30, 10, seed=3)
    assert samples.n_draws == 30
    assert samples.n_factors == 2
    assert samples.means().shape == (4, 2)


def test_excessive_threads_warn(setup, mocker):
    design, params = setup
    mocker.patch("services.samplers.estep.os.cpu_count", return_value=1)
    with pytest.warns(ExcessiveProcessesWarning):
        run_estep(design, params, 10, 0, seed=3, num_threads=2)
