import logging
from typing import List, Optional, Union

from models.configs import FitConfig
from models.survival import SurvivalDataset
from services.engine import build_design, fit_mcecm
from services.pipelines.survival_analysis import SurvivalAnalysisStandardPipeline
from services.pipelines.survival_analysis.runs.standard.options import check_env, check_r, resolve_fit_config
from services.selection import estimate_r, lambda_grid
from services.sources.implementations.sinks import JSONResultSink
from services.sources.implementations.survival import CSVSurvivalSource
from services.transformers import CovariateStandardizer, compute_cutpoints

logger = logging.getLogger(__name__)


def fit_task(data: SurvivalDataset, cfg: FitConfig, r: Union[str, int], lambda0: Optional[float],
             lambda1: Optional[float], options: dict) -> dict:
    """One MCECM fit; a missing penalty level defaults to the smallest value of its grid."""
    grid = compute_cutpoints(data.times, data.status, cfg.n_intervals)
    design = build_design(data, grid, cfg.random_columns)
    growth = None
    n_factors = r
    if r == "auto":
        growth = estimate_r(data, grid, cfg, design=design)
        n_factors = growth.r_hat
    if lambda0 is None or lambda1 is None:
        lambda0_seq, lambda1_seq = lambda_grid(design, cfg, 2, n_factors)
        lambda0 = float(lambda0_seq[0]) if lambda0 is None else lambda0
        lambda1 = float(lambda1_seq[0]) if lambda1 is None else lambda1

    fit = fit_mcecm(data, grid, lambda0, lambda1, n_factors, cfg, design=design)
    payload = {
        "config": {"run": options, "fit": cfg.model_dump(mode="json")},
        "seed": cfg.seed,
        "r": n_factors,
        **fit.summary(data),
    }
    if growth is not None:
        payload["growth_ratio"] = growth.summary()
    return payload


def fit_from_csv(
    env: str,
    input: str,
    output: str = None,
    r: Union[str, int] = "auto",
    lambda0: float = None,
    lambda1: float = None,
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
    Fit one penalized model at fixed penalty levels from a CSV file.

    Args:
        env (str): The environment to use (DEV, TEST, PROD).
        input (str): Path of the input CSV (group, time, status, covariates...).
        output (str, optional): Path of the output JSON. Defaults to None (result only returned).
        r (str | int, optional): Number of latent factors or "auto" for the Growth Ratio. Defaults to "auto".
        lambda0 (float, optional): Fixed-effect penalty level. Defaults to the smallest grid value.
        lambda1 (float, optional): Random-effect penalty level. Defaults to the smallest grid value.
        intervals (int, optional): Number of baseline hazard intervals. Defaults to None (from settings).
        penalty (str, optional): lasso, mcp or scad. Defaults to "mcp".
        gamma (float, optional): Concavity parameter. Defaults to the family default.
        pi (float, optional): Elastic-net mixing. Defaults to 1.0.
        seed (int, optional): Master seed. Defaults to None (from settings).
        max_em, max_mstep, burnin (int, optional): Iteration caps and burn-in.
        threads (int, optional): Worker threads for the E-step. Defaults to None (from settings).
        random_columns (list, optional): Predictors carrying random effects. Defaults to all.
        debug (bool, optional): Debug mode. Defaults to False.

    Returns:
        dict: The written payload.
    """
    check_env(env)
    r = check_r(r)
    cfg = resolve_fit_config(env, intervals, penalty, gamma, pi, seed, max_em, max_mstep, burnin, threads,
                             random_columns)
    options = {"subcommand": "fit", "input": input, "output": output, "r": r, "lambda0": lambda0,
               "lambda1": lambda1}

    pipeline = SurvivalAnalysisStandardPipeline(
        extractor_class=CSVSurvivalSource,
        transformer_class=CovariateStandardizer,
        task=fit_task,
        loader_class=JSONResultSink,
    )
    pipeline.set_extractor_kwargs(section="init", kwargs={"path": input})
    pipeline.set_task_kwargs(
        section="run",
        kwargs={"cfg": cfg, "r": r, "lambda0": lambda0, "lambda1": lambda1, "options": options},
    )
    pipeline.set_loader_kwargs(section="init", kwargs={"path": output})

    logger.info("Starting pipeline execution.")
    result = pipeline.run()
    logger.info("Pipeline execution completed.")
    return result
