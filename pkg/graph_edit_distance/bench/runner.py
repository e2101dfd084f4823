"""Benchmark configuration and orchestration."""

import json
import logging
import platform
from collections import OrderedDict
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import networkx
import numpy as np
import pandas as pd
import scipy

import graph_edit_distance
from graph_edit_distance.bench.matrix import DistanceMatrix, pairwise_matrix
from graph_edit_distance.bench.metrics import deviation, reference_matrix, scores
from graph_edit_distance.bench.report import ReportGenerator
from graph_edit_distance.core.exceptions import BenchmarkError, CostModelError
from graph_edit_distance.costs.config import load_cost_params
from graph_edit_distance.costs.factory import make_cost_model
from graph_edit_distance.data.dataset import load_dataset, subsets_by_vertex_count
from graph_edit_distance.methods.base import MethodOptions
from graph_edit_distance.methods.registry import MethodRegistry

logger = logging.getLogger(__name__)

DEFAULT_METHODS = ("f2", "f2lp", "f1lp", "bp", "beam", "hed")

_KNOWN_KEYS = {
    "dataset", "pattern", "cost", "methods", "time_limit", "subset_sizes", "graphs_per_subset",
    "seed", "workers", "beam_width", "astar_memory_limit", "zero_reference_epsilon", "solver",
}


@dataclass
class BenchmarkConfig:
    """
    Settings of one benchmark run.

    Attributes:
        dataset: Directory of graph files
        pattern: Glob pattern of the graph files
        cost: Built-in cost model name, cost config path or inline config
        methods: Method names, run in this order
        time_limit: Per-pair time limit in seconds
        subset_sizes: Vertex counts of the subsets (every count when None)
        graphs_per_subset: Optional number of graphs sampled per subset
        seed: Seed of the subset sampler
        workers: Worker processes per matrix
        beam_width: Beam width of beam search
        astar_memory_limit: Largest A* open list
        zero_reference_epsilon: Divisor for cells with zero reference (cells are excluded when None)
        solver: Extra SolveOptions fields
    """
    dataset: str
    pattern: str = "*.gxl"
    cost: Union[str, Dict[str, Any]] = "grec"
    methods: List[str] = field(default_factory=lambda: list(DEFAULT_METHODS))
    time_limit: float = 10.0
    subset_sizes: Optional[List[int]] = None
    graphs_per_subset: Optional[int] = None
    seed: int = 0
    workers: int = 1
    beam_width: int = 10
    astar_memory_limit: int = 1_000_000
    zero_reference_epsilon: Optional[float] = None
    solver: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.methods:
            raise BenchmarkError("Benchmark config needs at least one method")
        if self.time_limit <= 0:
            raise BenchmarkError("time_limit must be positive")
        if self.workers < 1:
            raise BenchmarkError("workers must be at least 1")
        if self.zero_reference_epsilon is not None and self.zero_reference_epsilon <= 0:
            raise BenchmarkError("zero_reference_epsilon must be positive")

    @classmethod
    def from_dict(cls, config: Mapping[str, Any], base_dir: Optional[Path] = None) -> "BenchmarkConfig":
        """
        Build a config from a parsed JSON object.

        Relative dataset and cost paths are resolved against base_dir.

        Raises:
            BenchmarkError: On unknown keys or a missing dataset entry
        """
        unknown = set(config) - _KNOWN_KEYS
        if unknown:
            raise BenchmarkError(f"Unknown benchmark config key(s): {', '.join(sorted(unknown))}")
        if "dataset" not in config:
            raise BenchmarkError("Benchmark config needs a 'dataset' directory")
        values = dict(config)
        if base_dir is not None:
            dataset = Path(values["dataset"])
            if not dataset.is_absolute():
                values["dataset"] = str(base_dir / dataset)
            cost = values.get("cost")
            if isinstance(cost, str) and cost.endswith(".json") and not Path(cost).is_absolute():
                values["cost"] = str(base_dir / cost)
        try:
            return cls(**values)
        except TypeError as exc:
            raise BenchmarkError(f"Invalid benchmark config: {exc}")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "BenchmarkConfig":
        """
        Load a JSON benchmark config file.

        Raises:
            BenchmarkError: If the file is missing or invalid
        """
        path = Path(path)
        if not path.exists():
            raise BenchmarkError(f"Benchmark config not found: {path}")
        try:
            config = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise BenchmarkError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})")
        if not isinstance(config, Mapping):
            raise BenchmarkError("Benchmark config must be a JSON object")
        return cls.from_dict(config, path.parent)

    def method_options(self) -> MethodOptions:
        return MethodOptions(
            time_limit=self.time_limit,
            beam_width=self.beam_width,
            astar_memory_limit=self.astar_memory_limit,
            solver=dict(self.solver),
        )


@dataclass
class MetricsReport:
    """
    Everything a benchmark run measured.

    Attributes:
        config: The run's configuration
        matrices: subset -> method -> DistanceMatrix
        references: subset -> reference matrix
        deviations: Long table (subset, method, mean_deviation, excluded_cells, mean_time)
        scores: Table (method, deviation_score, speed_score)
    """
    config: BenchmarkConfig
    matrices: "OrderedDict[int, Dict[str, DistanceMatrix]]"
    references: Dict[int, np.ndarray]
    deviations: pd.DataFrame
    scores: pd.DataFrame

    def flagged_cells(self) -> pd.DataFrame:
        """Cells stopped by a limit, per subset and method."""
        rows = [
            (subset, name, int(matrix.flagged.sum()))
            for subset, by_method in self.matrices.items()
            for name, matrix in by_method.items()
        ]
        return pd.DataFrame(rows, columns=["subset", "method", "flagged_cells"])


def run_benchmark(
    config: BenchmarkConfig,
    output_dir: Optional[Union[str, Path]] = None,
    registry: Optional[MethodRegistry] = None,
) -> MetricsReport:
    """
    Run every configured method on every subset and compute the metrics.

    Args:
        config: Benchmark configuration
        output_dir: If given, CSV artifacts, report.txt and manifest.json are written there
        registry: Method registry (defaults to the built-in methods)

    Returns:
        MetricsReport

    Raises:
        BenchmarkError: On missing dataset files, unknown methods or
            method/graph incompatibilities
    """
    registry = registry or MethodRegistry()
    methods = [registry.get(name) for name in config.methods]
    try:
        cost_model = make_cost_model(load_cost_params(config.cost))
    except CostModelError as exc:
        raise BenchmarkError(f"Invalid cost configuration: {exc}")
    options = config.method_options()

    graphs = load_dataset(config.dataset, config.pattern)
    subsets = subsets_by_vertex_count(graphs, config.subset_sizes, config.graphs_per_subset, config.seed)
    if not subsets:
        raise BenchmarkError("No graphs left after subset selection")

    matrices: "OrderedDict[int, Dict[str, DistanceMatrix]]" = OrderedDict()
    references: Dict[int, np.ndarray] = {}
    deviation_rows = []
    for size, subset in subsets.items():
        by_method: Dict[str, DistanceMatrix] = {}
        for method in methods:
            by_method[method.name] = pairwise_matrix(subset, method, cost_model, options, config.workers)
            logger.info("event=finished subset=%d method=%s graphs=%d", size, method.name, len(subset))
        matrices[size] = by_method
        reference = reference_matrix(by_method)
        references[size] = reference
        for name, matrix in by_method.items():
            dev = deviation(matrix, reference, config.zero_reference_epsilon)
            deviation_rows.append((size, name, dev.mean, dev.excluded, matrix.mean_time()))

    deviations = pd.DataFrame(
        deviation_rows, columns=["subset", "method", "mean_deviation", "excluded_cells", "mean_time"]
    )
    mean_devs = {size: {} for size in matrices}
    mean_times = {size: {} for size in matrices}
    for size, name, mean_dev, _, mean_time in deviation_rows:
        mean_devs[size][name] = mean_dev
        mean_times[size][name] = mean_time
    report = MetricsReport(config, matrices, references, deviations, scores(mean_devs, mean_times))

    if output_dir is not None:
        write_artifacts(report, Path(output_dir))
    return report


def write_artifacts(report: MetricsReport, output_dir: Path) -> List[Path]:
    """
    Write the CSV tables, report.txt and manifest.json of a run.

    Returns:
        Paths of the written files
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for size, by_method in report.matrices.items():
        for name, matrix in by_method.items():
            distances = output_dir / f"distances_{size}_{name}.csv"
            matrix.to_frame().to_csv(distances, index=False)
            times = output_dir / f"times_{size}_{name}.csv"
            matrix.times_frame().to_csv(times, index=False)
            written.extend([distances, times])

    deviations = output_dir / "deviations.csv"
    report.deviations.to_csv(deviations, index=False)
    score_file = output_dir / "scores.csv"
    report.scores.to_csv(score_file, index=False)
    text = output_dir / "report.txt"
    text.write_text(ReportGenerator().generate(report), encoding="utf-8")
    manifest = output_dir / "manifest.json"
    manifest.write_text(json.dumps(build_manifest(report), indent=2, sort_keys=True), encoding="utf-8")
    written.extend([deviations, score_file, text, manifest])
    logger.info("event=artifacts directory=%s files=%d", output_dir, len(written))
    return written


def build_manifest(report: MetricsReport) -> Dict[str, Any]:
    """Machine-readable record of the run's settings, inputs and library versions."""
    return {
        "config": asdict(report.config),
        "subsets": {
            str(size): list(next(iter(by_method.values())).graph_ids)
            for size, by_method in report.matrices.items()
        },
        "versions": {
            "graph_edit_distance": graph_edit_distance.__version__,
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "pandas": pd.__version__,
            "networkx": networkx.__version__,
        },
    }

