import pandas as pd
import pytest

from app.errors import DegenerateGradientError
from app.warnings import ExcessiveProcessesWarning
from models.configs import FitConfig, SimConfig
from services.evaluation import replicate_seed, run_replicate, run_replicates, summarize_replicates
from services.evaluation.replicates import SUMMARY_MEANS
from tests.utils import load_case_config, print_values

CONFIG = load_case_config(__file__)


@pytest.fixture
def configs():
    return SimConfig(**CONFIG["simulation"]), FitConfig(**CONFIG["fit_config"])


def _record(replicate, r_hat=None, **values):
    record = {"replicate": replicate, "seed": replicate_seed(42, replicate), "runtime": 0.1 * (replicate + 1),
              "r_hat": r_hat}
    record.update({column: 10.0 * (replicate + 1) for column in SUMMARY_MEANS})
    record.update(values)
    return record


def test_replicate_seeds_are_distinct_and_stable():
    seeds = [replicate_seed(7, i) for i in range(50)]
    assert len(set(seeds)) == 50
    assert seeds == [replicate_seed(7, i) for i in range(50)]
    assert replicate_seed(8, 0) != seeds[0]


def test_replicate_is_deterministic(configs, print_results):
    sim_cfg, fit_cfg = configs
    search = CONFIG["search"]
    first = run_replicate(sim_cfg, fit_cfg, 0, search["r"], search["n_lambda"])
    second = run_replicate(sim_cfg, fit_cfg, 0, search["r"], search["n_lambda"])
    print_values("replicate", first, print_results)
    first.pop("runtime"), second.pop("runtime")
    assert first == second
    assert first["seed"] == replicate_seed(sim_cfg.seed, 0)
    assert first["r_hat"] is None


def test_single_replicate_report(configs):
    sim_cfg, fit_cfg = configs
    search = CONFIG["search"]
    report = run_replicates(sim_cfg, fit_cfg, 1, search["r"], search["n_lambda"])
    assert report.failures == []
    assert report.summary["replicates"] == 1
    assert report.summary["failed"] == 0
    assert report.summary["tp_fixef"] == report.records["tp_fixef"].iloc[0]
    assert {"tp_fixef", "fp_fixef", "tp_ranef", "fp_ranef", "abs_dev_mean", "frob_norm",
            "t_med_hours"} <= set(report.records.columns)

    frame = report.to_frame()
    assert len(frame) == 2
    assert frame["replicate"].iloc[-1] == "summary"


def test_failed_replicate_is_recorded(configs, mocker):
    sim_cfg, fit_cfg = configs
    mocker.patch("services.evaluation.replicates.run_replicate",
                 side_effect=[_record(0), DegenerateGradientError("All fixed-effect scores vanish.")])
    report = run_replicates(sim_cfg, fit_cfg, 2, r=1)
    assert report.summary["replicates"] == 1
    assert report.summary["failed"] == 1
    assert report.failures[0]["replicate"] == 1
    assert report.failures[0]["error_code"] == "NUMERICAL"
    assert report.failures[0]["seed"] == replicate_seed(sim_cfg.seed, 1)


def test_summary_of_records():
    records = pd.DataFrame([_record(0, r_hat=1), _record(1, r_hat=2), _record(2, r_hat=3)])
    summary = summarize_replicates(records, n_factors=2)
    assert summary["replicates"] == 3
    assert summary["tp_fixed"] == pytest.approx(20.0)
    assert summary["runtime"] == pytest.approx(0.2)
    assert summary["r_hat"] == pytest.approx(2.0)
    assert summary["r_under_pct"] == pytest.approx(100 / 3)
    assert summary["r_correct_pct"] == pytest.approx(100 / 3)
    assert summary["r_over_pct"] == pytest.approx(100 / 3)


def test_summary_without_r_estimates():
    summary = summarize_replicates(pd.DataFrame([_record(0)]), n_factors=2)
    assert "r_correct_pct" not in summary


def test_excessive_threads_warn(configs, mocker):
    sim_cfg, fit_cfg = configs
    mocker.patch("services.evaluation.replicates.os.cpu_count", return_value=1)
    mocker.patch("services.evaluation.replicates.run_replicate", side_effect=lambda *args: _record(args[2]))
    with pytest.warns(ExcessiveProcessesWarning):
        report = run_replicates(sim_cfg, fit_cfg, 3, r=1, num_threads=2)
    assert report.records["replicate"].tolist() == [0, 1, 2]
