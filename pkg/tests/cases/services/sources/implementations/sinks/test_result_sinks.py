import json

import numpy as np
import pandas as pd

from services.sources.implementations.sinks import CSVResultSink, JSONResultSink


def test_json_sink_writes_plain_values(tmp_path):
    path = tmp_path / "out" / "fit.json"
    payload = JSONResultSink(str(path)).load_data({"beta": np.array([0.5, 0.0]), "value": np.nan, "n": np.int64(3)})
    assert payload == {"beta": [0.5, 0.0], "value": None, "n": 3}
    assert json.loads(path.read_text()) == payload


def test_json_sink_without_path_returns_payload():
    assert JSONResultSink().load_data({"r": np.int64(2)}) == {"r": 2}


def test_csv_sink(tmp_path):
    path = tmp_path / "nested" / "table.csv"
    frame = pd.DataFrame({"replicate": [0, 1], "tp_fixef": [100.0, 80.0]})
    assert CSVResultSink(str(path)).load_data(frame) == str(path)
    pd.testing.assert_frame_equal(pd.read_csv(path), frame)
    assert CSVResultSink().load_data(frame) is None
