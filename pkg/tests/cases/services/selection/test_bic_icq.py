import numpy as np
import pytest

from models.params import GroupChain, ModelParams, PosteriorSamples
from services.engine import build_design
from services.selection import bic_icq_from_components, effective_dimension, q_component
from services.optimizers import q1_value, q2_value
from services.transformers import compute_cutpoints
from tests.utils import make_dataset


def test_bic_from_components():
    assert bic_icq_from_components(50.0, 3, 100) == pytest.approx(63.8155, abs=1e-4)


def test_effective_dimension_counts_nonzero_entries():
    params = ModelParams(psi_tilde=np.zeros(3), beta=[1.0, 0.0], loadings=[[1.0, 0.0], [0.0, 0.0], [0.2, 0.3]])
    assert effective_dimension(params) == 3 + 1 + 3


def test_q_component_uses_reference_draws():
    data = make_dataset(n_subjects=40, n_groups=2, n_predictors=2)
    design = build_design(data, compute_cutpoints(data.times, data.status, 3))
    rng = np.random.default_rng(0)
    samples = PosteriorSamples(tuple(
        GroupChain(draws=rng.standard_normal((6, 1)), acceptance=np.zeros(1), log_scales=np.zeros(1))
        for _ in range(2)
    ))
    params = ModelParams(psi_tilde=[-1.0, 0.1, 0.2], beta=[0.3, 0.0], loadings=np.full((3, 1), 0.2))
    expected = 2 * (q1_value(params, samples, design) + q2_value(samples))
    assert q_component(params, samples, design) == pytest.approx(expected)


def test_q_component_is_rotation_invariant():
    data = make_dataset(n_subjects=45, n_groups=3, n_predictors=2, seed=11)
    design = build_design(data, compute_cutpoints(data.times, data.status, 3))
    rng = np.random.default_rng(4)
    chains = [rng.standard_normal((8, 2)) for _ in range(3)]
    params = ModelParams(psi_tilde=[-1.0, 0.2, 0.1], beta=[0.3, -0.1], loadings=rng.normal(scale=0.4, size=(3, 2)))
    rotation, _ = np.linalg.qr(rng.standard_normal((2, 2)))

    def _samples(draws):
        return PosteriorSamples(tuple(
            GroupChain(draws=d, acceptance=np.zeros(2), log_scales=np.zeros(2)) for d in draws
        ))

    rotated = params.copy()
    rotated.loadings = params.loadings @ rotation
    # draws of Q^T alpha are stored as rows alpha^T Q
    original = q_component(params, _samples(chains), design)
    assert q_component(rotated, _samples([d @ rotation for d in chains]), design) == pytest.approx(original, rel=1e-10)
