from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Union
import logging
import os
import time
import warnings

import numpy as np
import pandas as pd

from app.errors import CustomError, InvalidParameterValueError
from app.warnings import ExcessiveProcessesWarning
from models.configs import FitConfig, SimConfig
from models.mappings import rename_maps
from models.results import BenchmarkReport
from services.engine import build_design
from services.evaluation.selection_metrics import evaluate_selection
from services.selection import estimate_r, lambda_grid, two_stage_search
from services.sources.implementations.survival import simulate_dataset
from services.transformers import compute_cutpoints

logger = logging.getLogger(__name__)

SUMMARY_MEANS = ("tp_fixed", "fp_fixed", "tp_random", "fp_random", "mean_abs_dev", "frob_std",
                 "censor_rate", "c_index")


def replicate_seed(master_seed: int, replicate: int) -> int:
    """Seed of one replicate, derived from (master seed, replicate index)."""
    return int(np.random.SeedSequence([int(master_seed), int(replicate)]).generate_state(1)[0])


def run_replicate(sim_cfg: SimConfig, fit_cfg: FitConfig, replicate: int, r: Union[str, int] = "auto",
                  n_lambda: int = 10, min_ratio: float = 0.05) -> dict:
    """Simulates one dataset, selects a model with the two-stage search and scores it against the truth."""
    seed = replicate_seed(sim_cfg.seed, replicate)
    truth = sim_cfg.model_copy(update={"seed": seed})
    cfg = fit_cfg.model_copy(update={"seed": seed})

    started = time.perf_counter()
    data = simulate_dataset(truth)
    grid = compute_cutpoints(data.times, data.status, cfg.n_intervals)
    design = build_design(data, grid, cfg.random_columns)
    r_hat = None
    if r == "auto":
        r_hat = estimate_r(data, grid, cfg, design=design).r_hat
        n_factors = r_hat
    else:
        n_factors = int(r)
    lambda0_seq, lambda1_seq = lambda_grid(design, cfg, n_lambda, n_factors, min_ratio)
    path = two_stage_search(data, grid, n_factors, cfg, lambda0_seq, lambda1_seq, design=design)
    hours = (time.perf_counter() - started) / 3600.0

    metrics = evaluate_selection(path.best.fit, truth, data=data, runtime=hours, r_hat=r_hat)
    logger.info(f"Replicate {replicate}: TP fixed {metrics.tp_fixed:.1f}, FP fixed {metrics.fp_fixed:.2f}, "
                f"TP random {metrics.tp_random:.1f}, FP random {metrics.fp_random:.2f}")
    return {"replicate": replicate, "seed": seed, **metrics.model_dump()}


def summarize_replicates(records: pd.DataFrame, n_factors: int) -> dict:
    """Means of the accuracy metrics, median runtime and, when r was estimated, the r-hat hit rates."""
    summary = {"replicates": int(len(records))}
    for column in SUMMARY_MEANS:
        values = records[column].dropna() if column in records else pd.Series(dtype=float)
        summary[column] = float(values.mean()) if len(values) else None
    summary["runtime"] = float(records["runtime"].median()) if len(records) else None
    r_hat = records["r_hat"].dropna() if "r_hat" in records else pd.Series(dtype=float)
    if len(r_hat):
        summary["r_hat"] = float(r_hat.mean())
        summary["r_under_pct"] = 100.0 * float(np.mean(r_hat < n_factors))
        summary["r_correct_pct"] = 100.0 * float(np.mean(r_hat == n_factors))
        summary["r_over_pct"] = 100.0 * float(np.mean(r_hat > n_factors))
    return summary


def run_replicates(sim_cfg: SimConfig, fit_cfg: FitConfig, replicates: int, r: Union[str, int] = "auto",
                   n_lambda: int = 10, num_threads: int = 1, min_ratio: float = 0.05,
                   rename_map: Optional[dict] = None) -> BenchmarkReport:
    """
    Runs independent replicates and aggregates them in replicate order. A replicate that raises a
    domain error is recorded with its error code and left out of the summary.
    """
    if replicates < 1:
        raise InvalidParameterValueError(f"At least one replicate is required, got {replicates}.")
    if num_threads < 1:
        raise InvalidParameterValueError(f"num_threads must be positive, got {num_threads}.")
    available_cores = os.cpu_count() or 1
    if num_threads > available_cores:
        warnings.warn(ExcessiveProcessesWarning(num_threads, available_cores), stacklevel=2)
    rename_map = rename_maps["selection_metrics"] if rename_map is None else rename_map

    def attempt(replicate: int) -> dict:
        try:
            return run_replicate(sim_cfg, fit_cfg, replicate, r, n_lambda, min_ratio)
        except CustomError as e:
            logger.warning(f"Replicate {replicate} failed with {e.code}: {e.message}")
            return {"replicate": replicate, "seed": replicate_seed(sim_cfg.seed, replicate),
                    "error_code": e.code, "error": e.message}

    if num_threads > 1 and replicates > 1:
        with ThreadPoolExecutor(max_workers=min(num_threads, replicates)) as executor:
            results = list(executor.map(attempt, range(replicates)))
    else:
        results = [attempt(replicate) for replicate in range(replicates)]

    failures = [result for result in results if "error_code" in result]
    records = pd.DataFrame([result for result in results if "error_code" not in result],
                           columns=["replicate", "seed", *SUMMARY_MEANS, "runtime", "r_hat"])
    summary = summarize_replicates(records, sim_cfg.n_factors)
    summary["failed"] = len(failures)
    logger.info(f"Benchmark finished: {len(records)} replicates scored, {len(failures)} failed")
    return BenchmarkReport(
        records=records.rename(columns=rename_map),
        summary={rename_map.get(key, key): value for key, value in summary.items()},
        failures=failures,
    )
