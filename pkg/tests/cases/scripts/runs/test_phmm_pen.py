import json

import pandas as pd
import pytest

from app.errors import InvalidParameterValueError
from main import run
from scripts.runs.phmm_pen import error_response, main
from tests.utils import load_case_config

CONFIG = load_case_config(__file__)


def _response(capsys):
    return json.loads(capsys.readouterr().out.strip().splitlines()[-1])


@pytest.fixture
def simulated_csv(tmp_path, capsys):
    path = tmp_path / "sim.csv"
    assert run(["simulate", "--output", str(path), *CONFIG["simulate"]]) == 0
    _response(capsys)
    return path


def test_simulate_writes_input_layout(simulated_csv):
    frame = pd.read_csv(simulated_csv)
    assert list(frame.columns) == ["group", "time", "status", "x1", "x2", "x3"]
    assert len(frame) == 60


def test_fit_end_to_end(simulated_csv, tmp_path, capsys):
    output = tmp_path / "fit.json"
    assert run(["fit", "--input", str(simulated_csv), "--output", str(output), *CONFIG["fit"]]) == 0
    response = _response(capsys)
    assert response["status"] == "success"

    written = json.loads(output.read_text())
    assert written == response["result"]
    assert written["r"] == 1
    assert written["lambda0"] == 0.05
    assert written["seed"] == 20240101
    assert written["config"]["run"]["input"] == str(simulated_csv)
    assert len(written["beta_original_scale"]) == 3
    assert len(written["cutpoints"]) == 4


def test_fit_output_is_reproducible(simulated_csv, tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for output in (first, second):
        assert run(["fit", "--input", str(simulated_csv), "--output", str(output), *CONFIG["fit"]]) == 0
    capsys.readouterr()
    first, second = json.loads(first.read_text()), json.loads(second.read_text())
    assert first.pop("config")["run"]["output"] != second.pop("config")["run"]["output"]
    assert first == second


def test_select_end_to_end(simulated_csv, capsys):
    assert run(["select", "--input", str(simulated_csv), *CONFIG["select"]]) == 0
    result = _response(capsys)["result"]
    assert len(result["path"]) == 4
    assert result["best_index"] >= 2
    assert "bic_icq" in result


def test_bench_writes_table_and_summary(tmp_path, capsys):
    output = tmp_path / "bench.csv"
    assert run(["bench", "--output", str(output), *CONFIG["bench"]]) == 0
    _response(capsys)
    table = pd.read_csv(output)
    summary = json.loads((tmp_path / "bench.json").read_text())
    assert table["replicate"].astype(str).tolist()[-1] == "summary"
    assert summary["summary"]["replicates"] + summary["summary"]["failed"] == 1


def test_missing_status_column_fails_with_schema_code(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("group,time,x1\nA,1.0,0.5\nB,2.0,0.1\n", encoding="utf-8")
    assert run(["fit", "--input", str(path), "--env", "TEST", "--r", "1"]) == 1
    response = _response(capsys)
    assert response["status"] == "error"
    assert response["code"] == "DATA_SCHEMA"


def test_missing_input_file(tmp_path, capsys):
    assert run(["estimate-r", "--input", str(tmp_path / "absent.csv"), "--env", "TEST"]) == 1
    response = _response(capsys)
    assert response["code"] == "IO_ERROR"
    assert "absent.csv" in response["message"]


@pytest.mark.parametrize("argv", [
    ["fit", "--input", "data.csv", "-J", "0"],
    ["fit", "--input", "data.csv", "--threads", "0"],
    ["fit", "--input", "data.csv", "--random-columns", "a,b"],
    ["plot", "--input", "data.csv"],
    ["select", "--input", "data.csv", "--penalty", "ridge"],
])
def test_invalid_arguments_answer_with_error_json(argv, capsys):
    assert run([*argv, "--env", "TEST"]) == 1
    response = _response(capsys)
    assert response["status"] == "error"
    assert response["code"] == "INVALID_PARAMETER"


def test_runner_validation():
    with pytest.raises(InvalidParameterValueError):
        main(env="STAGE", runner="fit_from_csv", logs_level="INFO", params={})
    with pytest.raises(InvalidParameterValueError):
        main(env="TEST", runner="fit_from_csv", logs_level="LOUD", params={})
    with pytest.raises(InvalidParameterValueError):
        main(env="TEST", runner="plot_curves", logs_level="INFO", params={})


def test_error_response_for_unexpected_errors():
    assert json.loads(error_response(RuntimeError("boom"))) == {"status": "error", "code": "INTERNAL",
                                                                "message": "boom"}


def test_select_output_is_byte_identical(simulated_csv, tmp_path, capsys):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for output in (first, second):
        assert run(["select", "--input", str(simulated_csv), "--output", str(output), *CONFIG["select"]]) == 0
    capsys.readouterr()
    assert first.read_text().replace(str(first), str(second)) == second.read_text()
