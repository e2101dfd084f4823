"""Benchmark harness components."""

from graph_edit_distance.bench.matrix import DistanceMatrix, pairwise_matrix
from graph_edit_distance.bench.metrics import deviation, reference_matrix, scores
from graph_edit_distance.bench.report import ReportGenerator
from graph_edit_distance.bench.runner import BenchmarkConfig, MetricsReport, run_benchmark

__all__ = [
    'DistanceMatrix',
    'pairwise_matrix',
    'deviation',
    'reference_matrix',
    'scores',
    'ReportGenerator',
    'BenchmarkConfig',
    'MetricsReport',
    'run_benchmark',
]
