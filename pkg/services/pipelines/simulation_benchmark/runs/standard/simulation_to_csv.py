import logging

from models.configs import SimConfig
from models.survival import SurvivalDataset
from services.pipelines.survival_analysis import SurvivalAnalysisStandardPipeline
from services.pipelines.survival_analysis.runs.standard.options import check_env
from services.sources.implementations.sinks import CSVResultSink
from services.sources.implementations.survival import PiecewiseSimulationSource
from app.settings import get_settings

logger = logging.getLogger(__name__)


def resolve_sim_config(env: str, sim_preset: str, n: int, k: int, p: int, beta: float, seed: int) -> SimConfig:
    settings = get_settings(env=env)
    return SimConfig.from_preset(n_subjects=n, n_groups=k, n_predictors=p, beta_value=beta,
                                 loading_preset=sim_preset, seed=settings.DEFAULT_SEED if seed is None else seed,
                                 presets_path=settings.PRESETS_PATH)


def dataset_table(data: SurvivalDataset):
    return data.to_frame()


def simulate_to_csv(
    env: str,
    output: str = None,
    sim_preset: str = "moderate",
    n: int = None,
    k: int = None,
    p: int = None,
    beta: float = None,
    seed: int = None,
    debug: bool = False,
):
    """
    Simulate one dataset from a preset and write it in the input CSV layout.

    Args:
        env (str): The environment to use (DEV, TEST, PROD).
        output (str, optional): Path of the CSV. Defaults to None (nothing written).
        sim_preset (str, optional): Loading preset, "small" or "moderate". Defaults to "moderate".
        n, k, p (int, optional): Subjects, groups and predictors. Default to the preset.
        beta (float, optional): Value of the nonzero fixed effects. Defaults to the preset.
        seed (int, optional): Simulation seed. Defaults to None (from settings).
        debug (bool, optional): Debug mode. Defaults to False.

    Returns:
        dict: The resolved simulation config, the output path and a short description of the data.
    """
    check_env(env)
    sim_cfg = resolve_sim_config(env, sim_preset, n, k, p, beta, seed)

    pipeline = SurvivalAnalysisStandardPipeline(
        extractor_class=PiecewiseSimulationSource,
        transformer_class=None,
        task=dataset_table,
        loader_class=CSVResultSink,
    )
    pipeline.set_extractor_kwargs(section="init", kwargs={"config": sim_cfg})
    pipeline.set_loader_kwargs(section="init", kwargs={"path": output})

    logger.info("Starting pipeline execution.")
    written = pipeline.run()
    logger.info("Pipeline execution completed.")
    data = pipeline.data
    return {
        "config": {"run": {"subcommand": "simulate", "output": output, "sim_preset": sim_preset},
                   "simulation": sim_cfg.model_dump(mode="json")},
        "seed": sim_cfg.seed,
        "output": written,
        "n_subjects": data.n_subjects,
        "n_groups": data.n_groups,
        "n_events": data.n_events,
        "censor_rate": 1.0 - data.n_events / data.n_subjects,
    }
