from dataclasses import dataclass, field
from typing import Callable
import logging

from app.errors import CustomError
from models.configs import FitConfig, SimConfig
from models.results import BenchmarkReport


@dataclass
class BenchmarkStandardPipeline:
    """
    A pipeline that repeats simulate -> select -> evaluate over independent replicates and writes
    the per-replicate table and its summary.

    Attributes:
        benchmark (Callable): The replicate driver, called as
            ``benchmark(sim_cfg, fit_cfg, **benchmark_kwargs['run'])`` and returning a BenchmarkReport.
        table_loader_class (type): The class writing the per-replicate table.
        summary_loader_class (type): The class writing the JSON summary.
        simulation_config (SimConfig): Generative set-up; replicate seeds derive from its seed.
        fit_config (FitConfig): Settings of every fit.
    """
    benchmark: Callable
    table_loader_class: type
    summary_loader_class: type
    simulation_config: SimConfig
    fit_config: FitConfig

    benchmark_kwargs: dict = field(init=False, default_factory=dict)
    loader_kwargs: dict = field(init=False, default_factory=dict)

    def __post_init__(self):
        self.logger = logging.getLogger(__name__)
        self.report = None

    def set_benchmark_kwargs(self, section: str, kwargs: dict):
        """Set benchmark configuration parameters for a specific section."""
        self.logger.info(f"Setting benchmark kwargs for section '{section}'.")
        self.benchmark_kwargs[section] = kwargs

    def set_loader_kwargs(self, section: str, kwargs: dict):
        """Set loader configuration parameters for a specific section ('table' or 'summary')."""
        self.logger.info(f"Setting loader kwargs for section '{section}'.")
        self.loader_kwargs[section] = kwargs

    def run(self, payload: dict) -> dict:
        """Runs the replicates, adds summary, records and failures to ``payload`` and writes both outputs."""
        self.logger.info("Starting the benchmark execution.")
        try:
            self.report: BenchmarkReport = self.benchmark(self.simulation_config, self.fit_config,
                                                          **self.benchmark_kwargs.get('run', {}))
            table_loader = self.table_loader_class(**self.loader_kwargs.get('table', {}))
            summary_loader = self.summary_loader_class(**self.loader_kwargs.get('summary', {}))

            table_loader.load_data(self.report.to_frame())
            payload = {
                **payload,
                "summary": self.report.summary,
                "replicates": self.report.records.to_dict(orient="records"),
                "failures": self.report.failures,
            }
            return summary_loader.load_data(payload)
        except CustomError as e:
            self.logger.error(f"Benchmark failed with {e.code}: {e.message}")
            raise
