import logging
import os
from typing import List, Union

from app.settings import get_settings
from services.evaluation import run_replicates
from services.pipelines.simulation_benchmark.benchmark_pipeline import BenchmarkStandardPipeline
from services.pipelines.simulation_benchmark.runs.standard.simulation_to_csv import resolve_sim_config
from services.pipelines.survival_analysis.runs.standard.options import check_env, check_r, resolve_fit_config
from services.sources.implementations.sinks import CSVResultSink, JSONResultSink

logger = logging.getLogger(__name__)


def output_paths(output: str):
    """A ``.csv`` output gets its JSON summary next to it; any other path is the JSON summary itself."""
    if not output:
        return None, None
    stem, extension = os.path.splitext(output)
    if extension.lower() == ".csv":
        return output, f"{stem}.json"
    return f"{stem}.csv", output


def bench_to_csv(
    env: str,
    output: str = None,
    replicates: int = 1,
    r: Union[str, int] = "auto",
    n_lambda: int = None,
    sim_preset: str = "moderate",
    n: int = None,
    k: int = None,
    p: int = None,
    beta: float = None,
    seed: int = None,
    intervals: int = None,
    penalty: str = "mcp",
    gamma: float = None,
    pi: float = 1.0,
    max_em: int = None,
    max_mstep: int = None,
    burnin: int = None,
    threads: int = None,
    random_columns: List[int] = None,
    debug: bool = False,
):
    """
    Run the simulation benchmark: simulate, select and evaluate ``replicates`` times.

    Args:
        env (str): The environment to use (DEV, TEST, PROD).
        output (str, optional): Path of the CSV table (summary JSON next to it) or of the JSON summary.
        replicates (int, optional): Number of replicates. Defaults to 1.
        r (str | int, optional): Number of latent factors or "auto". Defaults to "auto".
        n_lambda (int, optional): Length of each penalty sequence. Defaults to None (from settings).
        threads (int, optional): Replicates run in parallel on this many threads. Defaults to None (from settings).
        Simulation and fit arguments as in ``simulate_to_csv`` and ``fit_from_csv``.

    Returns:
        dict: Resolved configs, the summary, per-replicate records and failures.
    """
    check_env(env)
    r = check_r(r)
    settings = get_settings(env=env)
    n_lambda = n_lambda or settings.DEFAULT_N_LAMBDA
    threads = threads or settings.NUM_THREADS
    sim_cfg = resolve_sim_config(env, sim_preset, n, k, p, beta, seed)
    # Replicates own the threads; each fit samples its groups sequentially
    fit_cfg = resolve_fit_config(env, intervals, penalty, gamma, pi, sim_cfg.seed, max_em, max_mstep, burnin, 1,
                                 random_columns)
    table_path, summary_path = output_paths(output)

    pipeline = BenchmarkStandardPipeline(
        benchmark=run_replicates,
        table_loader_class=CSVResultSink,
        summary_loader_class=JSONResultSink,
        simulation_config=sim_cfg,
        fit_config=fit_cfg,
    )
    pipeline.set_benchmark_kwargs(
        section="run",
        kwargs={"replicates": replicates, "r": r, "n_lambda": n_lambda, "num_threads": threads},
    )
    pipeline.set_loader_kwargs(section="table", kwargs={"path": table_path})
    pipeline.set_loader_kwargs(section="summary", kwargs={"path": summary_path})

    options = {"subcommand": "bench", "output": output, "replicates": replicates, "r": r, "n_lambda": n_lambda,
               "threads": threads, "sim_preset": sim_preset}
    logger.info("Starting benchmark execution.")
    result = pipeline.run({
        "config": {"run": options, "simulation": sim_cfg.model_dump(mode="json"),
                   "fit": fit_cfg.model_dump(mode="json")},
        "seed": sim_cfg.seed,
    })
    logger.info("Benchmark execution completed.")
    return result
