import numpy as np
import pytest

from app.errors import DataSchemaError, InputNotFoundError, InvalidSurvivalDataError
from services.sources.implementations.survival import CSVSurvivalSource

VALID = "group,time,status,age,dose\nA,1.5,1,50,0.1\nA,2.0,0,61,0.3\nB,0.7,1,45,0.2\nB,3.1,1,70,0.5\n"


def _write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_reads_columns_in_file_order(tmp_path):
    data = CSVSurvivalSource(_write(tmp_path, VALID)).extract_data()
    assert data.n_subjects == 4
    assert data.group_labels == ("A", "B")
    assert data.covariate_names == ("age", "dose")
    np.testing.assert_allclose(data.times, [1.5, 2.0, 0.7, 3.1])
    np.testing.assert_array_equal(data.status, [1, 0, 1, 1])


def test_missing_file(tmp_path):
    source = CSVSurvivalSource(str(tmp_path / "absent.csv"))
    assert not source.check_source_exists()
    with pytest.raises(InputNotFoundError):
        source.extract_data()


def test_missing_status_column(tmp_path):
    with pytest.raises(DataSchemaError):
        CSVSurvivalSource(_write(tmp_path, "group,time,x\nA,1.0,0.5\nB,2.0,0.1\n")).extract_data()


@pytest.mark.parametrize("text", [
    "",
    "group,time,status,x\nA,soon,1,0.5\nB,2.0,0,0.1\n",
])
def test_unreadable_content(tmp_path, text):
    with pytest.raises(DataSchemaError):
        CSVSurvivalSource(_write(tmp_path, text)).extract_data()


def test_invalid_status_values(tmp_path):
    with pytest.raises(InvalidSurvivalDataError):
        CSVSurvivalSource(_write(tmp_path, "group,time,status,x\nA,1.0,2,0.5\nB,2.0,1,0.1\n")).extract_data()
