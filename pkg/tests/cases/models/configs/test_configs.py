import pytest

from app.errors import InvalidParameterValueError
from app.warnings import IntervalCountWarning
from models.configs import RUNNER_PARAMS, FitConfig, PenaltyConfig, RunConfig, SimConfig


def test_penalty_defaults():
    assert PenaltyConfig().gamma == 3.0
    assert PenaltyConfig(kind="scad").gamma == 3.7
    assert PenaltyConfig(kind="lasso").gamma is None
    assert PenaltyConfig(kind="mcp", gamma=5.0).gamma == 5.0


@pytest.mark.parametrize("options", [
    {"kind": "ridge"},
    {"kind": "mcp", "gamma": 1.0},
    {"kind": "scad", "gamma": 2.0},
    {"pi": 0.0},
    {"pi": 1.5},
])
def test_penalty_rejects_invalid(options):
    with pytest.raises(InvalidParameterValueError):
        PenaltyConfig(**options)


@pytest.mark.parametrize("iteration, expected", [(1, 500), (5, 500), (6, 750), (40, 2250), (45, 2500), (100, 2500)])
def test_sample_size_schedule(iteration, expected):
    assert FitConfig().sample_size(iteration) == expected


@pytest.mark.parametrize("options", [
    {"n_intervals": 1},
    {"max_em": 0},
    {"burnin": -1},
    {"em_tol": 0.0},
    {"backtrack": 1.0},
    {"target_accept": 1.0},
])
def test_fit_config_rejects_invalid(options):
    with pytest.raises(InvalidParameterValueError):
        FitConfig(**options)


def test_fit_config_from_options():
    cfg = FitConfig.from_options(env="TEST", intervals=6, penalty="scad", seed=5, max_em=3, random_columns=[0, 2])
    assert cfg.n_intervals == 6
    assert cfg.penalty.kind == "scad"
    assert cfg.penalty.gamma == 3.7
    assert cfg.seed == 5
    assert cfg.max_em == 3
    assert cfg.burnin == 100
    assert cfg.random_columns == [0, 2]
    assert cfg.sample_size(1) == 500


def test_fit_config_from_options_unknown_env():
    with pytest.raises(InvalidParameterValueError):
        FitConfig.from_options(env="STAGE")


@pytest.mark.parametrize("options", [
    {"n_groups": 1},
    {"beta_true": [1.0]},
    {"loadings": [[1.0], [0.0]]},
    {"psi_star": [0.0]},
    {"sim_cutpoints": [0.0]},
    {"censor_max": 0.0},
])
def test_sim_config_rejects_invalid(options):
    base = dict(n_subjects=20, n_groups=2, n_predictors=2, beta_true=[1.0, 0.0], loadings=[[1.0], [0.0], [0.0]],
                psi_star=[0.0, 0.5], sim_cutpoints=[1.0])
    with pytest.raises(InvalidParameterValueError):
        SimConfig(**{**base, **options})


def test_sim_config_unknown_preset():
    with pytest.raises(InvalidParameterValueError):
        SimConfig.from_preset(loading_preset="large")


def test_run_config_warns_on_unusual_interval_count():
    with pytest.warns(IntervalCountWarning):
        RunConfig(subcommand="simulate", intervals=3)


@pytest.mark.parametrize("options", [
    {"subcommand": "plot"},
    {"subcommand": "fit"},
    {"subcommand": "simulate", "intervals": 60},
    {"subcommand": "simulate", "r": "many"},
    {"subcommand": "simulate", "r": 0},
    {"subcommand": "simulate", "n_lambda": 1},
    {"subcommand": "simulate", "lambda0": -1.0},
    {"subcommand": "bench", "sim_preset": "large"},
])
def test_run_config_rejects_invalid(options):
    with pytest.raises(InvalidParameterValueError):
        RunConfig(**options)


def test_run_config_runner_params():
    config = RunConfig(subcommand="fit", input="data.csv", r="2", random_columns=[1])
    assert config.r == 2
    assert config.runner == ("survival_analysis", "fit_from_csv")
    params = config.runner_params()
    assert list(params) == list(dict.fromkeys(RUNNER_PARAMS["fit"]))
    assert params["input"] == "data.csv"
    assert params["random_columns"] == [1]


def test_bench_params_list_seed_once():
    params = RunConfig(subcommand="bench").runner_params()
    assert list(params).count("seed") == 1
    assert params["replicates"] == 1
