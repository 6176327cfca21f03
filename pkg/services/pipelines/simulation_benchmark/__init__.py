from .benchmark_pipeline import BenchmarkStandardPipeline
from .runs.standard.simulation_to_csv import simulate_to_csv
from .runs.standard.benchmark_to_csv import bench_to_csv

__all__ = [
    'BenchmarkStandardPipeline',
    'simulate_to_csv',
    'bench_to_csv',
]
