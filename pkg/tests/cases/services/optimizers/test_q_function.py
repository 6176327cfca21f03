import numpy as np
import pytest

from app.errors import DimensionMismatchError
from models.params import GroupChain, ModelParams, PosteriorSamples
from models.survival import IntervalGrid, SurvivalDataset
from services.engine import build_design
from services.optimizers import QFunction, q1_value, q2_value
from services.samplers import GroupPosterior
from services.transformers import compute_cutpoints
from tests.utils import load_case_config, make_dataset

CONFIG = load_case_config(__file__)


def _chain(draws):
    draws = np.asarray(draws, dtype=float)
    return GroupChain(draws=draws, acceptance=np.zeros(draws.shape[1]), log_scales=np.zeros(draws.shape[1]))


@pytest.fixture
def single_row_design():
    # one subject with d = 1 and t* = 1 in the first interval; the other contributes no rows
    data = SurvivalDataset.build(groups=[1, 2], times=[1.0, 0.0], status=[1, 0], covariates=np.zeros((2, 0)))
    return build_design(data, IntervalGrid([5.0]), random_columns=[])


def test_single_row_hand_value(single_row_design):
    params = ModelParams(psi_tilde=np.zeros(2), beta=np.zeros(0), loadings=np.ones((1, 1)))
    samples = PosteriorSamples((_chain([[0.0]]), None))
    assert q1_value(params, samples, single_row_design) == pytest.approx(1.0)


def test_single_row_log_posterior(single_row_design):
    params = ModelParams(psi_tilde=np.zeros(2), beta=np.zeros(0), loadings=np.ones((1, 1)))
    posterior = GroupPosterior(single_row_design, 0, params)
    for alpha in (-1.3, 0.4, 2.0):
        expected = alpha - np.exp(alpha) - alpha ** 2 / 2 - (0.0 - 1.0)
        assert posterior.log_density([alpha]) - posterior.log_density([0.0]) == pytest.approx(expected)


def test_zero_loadings_ignore_samples():
    data = make_dataset(n_subjects=40, n_groups=2, n_predictors=2)
    design = build_design(data, compute_cutpoints(data.times, data.status, 3))
    params = ModelParams(psi_tilde=np.array([-1.0, 0.2, 0.1]), beta=np.array([0.3, -0.1]),
                         loadings=np.zeros((3, 2)))
    rng = np.random.default_rng(0)
    samples = PosteriorSamples((_chain(rng.standard_normal((7, 2))), _chain(rng.standard_normal((7, 2)))))
    assert q1_value(params, samples, design) == pytest.approx(q1_value(params, None, design))


def test_gradient_matches_finite_differences():
    case = CONFIG["gradient_instances"]
    rng = np.random.default_rng(case["seed"])
    for instance in range(case["count"]):
        data = make_dataset(n_subjects=case["n_subjects"], n_groups=case["n_groups"],
                            n_predictors=case["n_predictors"], seed=instance)
        design = build_design(data, compute_cutpoints(data.times, data.status, case["n_intervals"]))
        samples = PosteriorSamples(tuple(_chain(rng.standard_normal((case["n_draws"], case["n_factors"])))
                                         for _ in range(case["n_groups"])))
        params = ModelParams(
            psi_tilde=rng.normal(0.0, 0.3, size=case["n_intervals"]) - np.eye(case["n_intervals"])[0],
            beta=rng.normal(0.0, 0.3, size=case["n_predictors"]),
            loadings=rng.normal(0.0, 0.3, size=(case["n_predictors"] + 1, case["n_factors"])),
        )
        q = QFunction(design, samples)
        analytic = np.concatenate([g.ravel() for g in q.gradient(params)])

        flat = np.concatenate([params.psi_tilde, params.beta, params.loadings.ravel()])
        sizes = np.cumsum([params.n_intervals, params.p])

        def value(vector):
            psi, beta, loadings = np.split(vector, sizes)
            return q.value(ModelParams(psi_tilde=psi, beta=beta, loadings=loadings.reshape(params.loadings.shape)))

        h = case["step"]
        numeric = np.array([(value(flat + h * e) - value(flat - h * e)) / (2 * h) for e in np.eye(flat.size)])
        np.testing.assert_allclose(analytic, numeric, rtol=case["rtol"], atol=case["atol"] * max(1.0, np.abs(numeric).max()))


def test_q2_is_standard_normal_energy():
    samples = PosteriorSamples((_chain([[0.0], [1.0]]), _chain([[2.0], [0.0]])))
    # -(1/M) sum log phi = (1/M) sum (a^2 / 2 + log sqrt(2 pi))
    expected = (0.5 + 2.0) / 2 + 2 * 0.5 * np.log(2 * np.pi)
    assert q2_value(samples) == pytest.approx(expected)


def test_missing_group_draws(single_row_design):
    with pytest.raises(DimensionMismatchError):
        QFunction(single_row_design, PosteriorSamples((None, None)))
