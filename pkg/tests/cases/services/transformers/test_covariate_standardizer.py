import numpy as np
import pytest

from app.errors import ZeroVarianceColumnError
from services.transformers import CovariateStandardizer, standardize_covariates
from tests.utils import load_case_config, make_dataset

CONFIG = load_case_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["standardize_tests"])
def test_standardize_columns(test_data):
    standardized, centers, scales = standardize_covariates(np.array(test_data["column"])[:, None])
    np.testing.assert_allclose(standardized[:, 0], test_data["expected"], atol=1e-12)
    assert centers[0] == pytest.approx(test_data["center"])
    assert scales[0] == pytest.approx(test_data["scale"])


def test_constant_column_is_rejected():
    with pytest.raises(ZeroVarianceColumnError) as error:
        standardize_covariates(np.array([[1.0, 5.0], [2.0, 5.0]]))
    assert error.value.column == 1


def test_standardized_moments():
    rng = np.random.default_rng(1)
    standardized, _, _ = standardize_covariates(rng.normal(3.0, 2.0, size=(50, 4)))
    np.testing.assert_allclose(standardized.sum(axis=0), 0.0, atol=1e-10)
    np.testing.assert_allclose(np.mean(standardized ** 2, axis=0), 1.0, atol=1e-10)


def test_coefficient_scale_round_trip():
    data = CovariateStandardizer().transform(make_dataset(standardize=False))
    beta = np.array([0.4, -1.2, 0.0])
    np.testing.assert_allclose(data.standardize_coefficients(data.destandardize_coefficients(beta)), beta,
                               atol=1e-12)


def test_standardizer_keeps_prepared_data():
    data = make_dataset(standardize=True)
    assert CovariateStandardizer().transform(data) is data
