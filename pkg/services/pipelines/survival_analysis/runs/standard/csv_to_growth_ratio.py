import logging
from typing import List

from models.configs import FitConfig
from models.survival import SurvivalDataset
from services.pipelines.survival_analysis import SurvivalAnalysisStandardPipeline
from services.pipelines.survival_analysis.runs.standard.options import check_env, resolve_fit_config
from services.selection import estimate_r
from services.sources.implementations.sinks import JSONResultSink
from services.sources.implementations.survival import CSVSurvivalSource
from services.transformers import CovariateStandardizer, compute_cutpoints

logger = logging.getLogger(__name__)


def growth_ratio_task(data: SurvivalDataset, cfg: FitConfig, max_factors: int, options: dict) -> dict:
    grid = compute_cutpoints(data.times, data.status, cfg.n_intervals)
    growth = estimate_r(data, grid, cfg, max_factors=max_factors)
    return {
        "config": {"run": options, "fit": cfg.model_dump(mode="json")},
        "seed": cfg.seed,
        "cutpoints": grid.to_list(),
        **growth.summary(),
    }


def estimate_r_from_csv(
    env: str,
    input: str,
    output: str = None,
    max_factors: int = None,
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
    Estimate the number of latent factors with the Growth Ratio and write its diagnostics.

    Args:
        env (str): The environment to use (DEV, TEST, PROD).
        input (str): Path of the input CSV.
        output (str, optional): Path of the output JSON.
        max_factors (int, optional): Largest candidate U. Defaults to min(min(q, K) - 2, 10).
        Remaining arguments as in ``fit_from_csv``.

    Returns:
        dict: Eigenvalues, tail sums V, the GR sequence, U and r_hat.
    """
    check_env(env)
    cfg = resolve_fit_config(env, intervals, penalty, gamma, pi, seed, max_em, max_mstep, burnin, threads,
                             random_columns)
    options = {"subcommand": "estimate-r", "input": input, "output": output, "max_factors": max_factors}

    pipeline = SurvivalAnalysisStandardPipeline(
        extractor_class=CSVSurvivalSource,
        transformer_class=CovariateStandardizer,
        task=growth_ratio_task,
        loader_class=JSONResultSink,
    )
    pipeline.set_extractor_kwargs(section="init", kwargs={"path": input})
    pipeline.set_task_kwargs(section="run", kwargs={"cfg": cfg, "max_factors": max_factors, "options": options})
    pipeline.set_loader_kwargs(section="init", kwargs={"path": output})

    logger.info("Starting pipeline execution.")
    result = pipeline.run()
    logger.info("Pipeline execution completed.")
    return result
