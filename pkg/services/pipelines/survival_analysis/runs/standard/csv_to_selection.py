import logging
from typing import List, Union

from app.settings import get_settings
from models.configs import FitConfig
from models.survival import SurvivalDataset
from services.engine import build_design
from services.pipelines.survival_analysis import SurvivalAnalysisStandardPipeline
from services.pipelines.survival_analysis.runs.standard.options import check_env, check_r, resolve_fit_config
from services.selection import estimate_r, lambda_grid, two_stage_search
from services.sources.implementations.sinks import JSONResultSink
from services.sources.implementations.survival import CSVSurvivalSource
from services.transformers import CovariateStandardizer, compute_cutpoints

logger = logging.getLogger(__name__)


def selection_task(data: SurvivalDataset, cfg: FitConfig, r: Union[str, int], n_lambda: int, options: dict) -> dict:
    """Two-stage BIC-ICQ search; the best model's estimates sit at the top level of the payload."""
    grid = compute_cutpoints(data.times, data.status, cfg.n_intervals)
    design = build_design(data, grid, cfg.random_columns)
    growth = None
    n_factors = r
    if r == "auto":
        growth = estimate_r(data, grid, cfg, design=design)
        n_factors = growth.r_hat

    lambda0_seq, lambda1_seq = lambda_grid(design, cfg, n_lambda, n_factors)
    path = two_stage_search(data, grid, n_factors, cfg, lambda0_seq, lambda1_seq, design=design)
    payload = {
        "config": {"run": options, "fit": cfg.model_dump(mode="json")},
        "seed": cfg.seed,
        "r": n_factors,
        **path.best.fit.summary(data),
        "bic_icq": path.best.bic_icq,
        **path.summary(),
    }
    if growth is not None:
        payload["growth_ratio"] = growth.summary()
    return payload


def select_from_csv(
    env: str,
    input: str,
    output: str = None,
    r: Union[str, int] = "auto",
    n_lambda: int = None,
    intervals: int = None,
    penalty: str = "mcp",
    gamma: float = None,
    pi: float = 1.0,
    seed: int = None,
    max_em: int = None,
    max_mstep: int = None,
    burnin: int = None,
    threads: int = None,
    random_columns: List[int] = None,
    debug: bool = False,
):
    """
    Run the two-stage penalty search on a CSV file and write the path with the best model.

    Args:
        env (str): The environment to use (DEV, TEST, PROD).
        input (str): Path of the input CSV.
        output (str, optional): Path of the output JSON.
        r (str | int, optional): Number of latent factors or "auto". Defaults to "auto".
        n_lambda (int, optional): Length of each penalty sequence. Defaults to None (from settings).
        Remaining arguments as in ``fit_from_csv``.

    Returns:
        dict: The written payload.
    """
    check_env(env)
    r = check_r(r)
    n_lambda = n_lambda or get_settings(env=env).DEFAULT_N_LAMBDA
    cfg = resolve_fit_config(env, intervals, penalty, gamma, pi, seed, max_em, max_mstep, burnin, threads,
                             random_columns)
    options = {"subcommand": "select", "input": input, "output": output, "r": r, "n_lambda": n_lambda}

    pipeline = SurvivalAnalysisStandardPipeline(
        extractor_class=CSVSurvivalSource,
        transformer_class=CovariateStandardizer,
        task=selection_task,
        loader_class=JSONResultSink,
    )
    pipeline.set_extractor_kwargs(section="init", kwargs={"path": input})
    pipeline.set_task_kwargs(section="run", kwargs={"cfg": cfg, "r": r, "n_lambda": n_lambda, "options": options})
    pipeline.set_loader_kwargs(section="init", kwargs={"path": output})

    logger.info("Starting pipeline execution.")
    result = pipeline.run()
    logger.info("Pipeline execution completed.")
    return result
