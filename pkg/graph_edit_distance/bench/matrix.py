"""Pairwise distance matrices."""

import logging
import multiprocessing
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.methods.base import GedMethod, MethodOptions, MethodRole

logger = logging.getLogger(__name__)

# statuses whose value is proven (exact methods) or final (bounds and heuristics)
_SETTLED = {SolveStatus.OPTIMAL.value, SolveStatus.HEURISTIC.value}


@dataclass
class DistanceMatrix:
    """
    All pairwise values of one method on one list of graphs.

    Attributes:
        method: Method name
        role: Role of the method's values
        graph_ids: Graph identifiers in row/column order
        values: m x m distances
        statuses: m x m status values (strings)
        seconds: m x m wall times
    """
    method: str
    role: MethodRole
    graph_ids: Tuple[str, ...]
    values: np.ndarray
    statuses: np.ndarray
    seconds: np.ndarray

    @property
    def size(self) -> int:
        return len(self.graph_ids)

    @property
    def flagged(self) -> np.ndarray:
        """Cells whose value is not settled (limits hit, no solution)."""
        return ~np.isin(self.statuses, list(_SETTLED))

    def to_frame(self) -> pd.DataFrame:
        """Long table (i, j, g1, g2, distance, status) in row-major order."""
        rows = [
            (i, j, self.graph_ids[i], self.graph_ids[j], self.values[i, j], self.statuses[i, j])
            for i in range(self.size)
            for j in range(self.size)
        ]
        return pd.DataFrame(rows, columns=["i", "j", "g1", "g2", "distance", "status"])

    def times_frame(self) -> pd.DataFrame:
        rows = [(i, j, self.seconds[i, j]) for i in range(self.size) for j in range(self.size)]
        return pd.DataFrame(rows, columns=["i", "j", "seconds"])

    def mean_time(self) -> float:
        return float(self.seconds.mean()) if self.size else 0.0


Job = Tuple[int, int, GedMethod, AttributedGraph, AttributedGraph, CostModel, MethodOptions]


def _run_pair(job: Job) -> Tuple[int, int, float, str, float]:
    i, j, method, g1, g2, cost_model, options = job
    outcome = method.compute(g1, g2, cost_model, options)
    return i, j, outcome.distance, outcome.status.value, outcome.seconds


def _jobs(graphs: Sequence[AttributedGraph], method: GedMethod, cost_model: CostModel,
          options: MethodOptions) -> Iterable[Job]:
    for i, g1 in enumerate(graphs):
        for j, g2 in enumerate(graphs):
            yield i, j, method, g1, g2, cost_model, options


def pairwise_matrix(
    graphs: Sequence[AttributedGraph],
    method: GedMethod,
    cost_model: CostModel,
    options: Optional[MethodOptions] = None,
    workers: int = 1,
) -> DistanceMatrix:
    """
    Run a method on every ordered pair of graphs, diagonal included.

    Args:
        graphs: Graphs of one subset
        method: Distance method
        cost_model: Cost model; must be picklable when workers > 1
        options: Per-pair settings (time limit, beam width, ...)
        workers: Number of worker processes

    Returns:
        DistanceMatrix; entries stopped by a limit keep their best value and a flagged status

    Raises:
        BenchmarkError: If the method does not apply to the graphs
    """
    options = options or MethodOptions()
    for graph in graphs:
        if not method.is_applicable(graph, graphs[0]):
            raise BenchmarkError(
                f"Method '{method.name}' does not apply to graph '{graph.graph_id}' "
                f"({'directed' if graph.directed else 'undirected'})"
            )
    m = len(graphs)
    values = np.zeros((m, m))
    statuses = np.full((m, m), SolveStatus.OPTIMAL.value, dtype=object)
    seconds = np.zeros((m, m))

    jobs = _jobs(graphs, method, cost_model, options)
    if workers > 1 and m > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            results: List[Tuple[int, int, float, str, float]] = pool.map(_run_pair, list(jobs), chunksize=1)
    else:
        results = [_run_pair(job) for job in jobs]

    for i, j, distance, status, elapsed in results:
        values[i, j] = distance
        statuses[i, j] = status
        seconds[i, j] = elapsed

    matrix = DistanceMatrix(method.name, method.role, tuple(g.graph_id for g in graphs), values, statuses, seconds)
    logger.info(
        "event=matrix method=%s graphs=%d flagged=%d mean_time=%.4f",
        method.name, m, int(matrix.flagged.sum()), matrix.mean_time(),
    )
    return matrix
