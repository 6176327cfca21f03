import numpy as np
import pandas as pd
import pytest

from app.errors import InvalidPairError
from services.transformers import TSPTransformer, tsp_transform
from tests.utils import load_case_config

CONFIG = load_case_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["indicator_tests"])
def test_tsp_indicator(test_data):
    expr = np.array([[test_data["a"], test_data["b"]]])
    assert tsp_transform(expr, [(0, 1)])[0, 0] == test_data["expected"]


def test_tsp_transformer_on_named_columns():
    frame = pd.DataFrame({"KIAA1324": [2.0, 1.0, 3.0], "GRB7": [1.0, 1.0, 4.0], "ESR1": [0.5, 2.0, 0.0]})
    result = TSPTransformer(pairs=[("KIAA1324", "GRB7"), ("ESR1", "GRB7")]).transform(frame)
    assert list(result.columns) == ["KIAA1324>GRB7", "ESR1>GRB7"]
    np.testing.assert_array_equal(result.to_numpy(), [[1, 0], [0, 1], [0, 0]])


@pytest.mark.parametrize("pair", [(0, 0), (0, 5), ("missing", 1)])
def test_invalid_pairs(pair):
    with pytest.raises(InvalidPairError):
        tsp_transform(np.ones((2, 3)), [pair])
