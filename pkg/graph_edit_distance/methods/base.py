"""Base class for graph edit distance methods."""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from graph_edit_distance.core.edit_path import EditPath, SolveStatus
from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.solver.options import SolveOptions


class MethodRole(Enum):
    """What a method's value means relative to the exact distance."""
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class MethodOptions:
    """
    Per-pair settings shared by all methods.

    Attributes:
        time_limit: Wall-clock limit per pair in seconds
        beam_width: Beam width of beam search
        astar_memory_limit: Largest A* open list
        seed_incumbent: Start branch-and-bound from the BP path
        solver: Extra SolveOptions fields (mip_gap, branching, ...)
    """
    time_limit: float = 10.0
    beam_width: int = 10
    astar_memory_limit: int = 1_000_000
    seed_incumbent: bool = True
    solver: Dict[str, Any] = field(default_factory=dict)

    def solve_options(self) -> SolveOptions:
        return SolveOptions(time_limit=self.time_limit, **self.solver)


@dataclass
class MethodOutcome:
    """
    Result of one method on one graph pair.

    Attributes:
        distance: Distance (or bound) reported by the method
        status: Termination status; heuristic for methods without a proof
        seconds: Wall time of the method call
        path: Edit path, for methods that produce one
        best_bound: Proven lower bound, for branch-and-bound methods
    """
    distance: float
    status: SolveStatus
    seconds: float = 0.0
    path: Optional[EditPath] = None
    best_bound: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "distance": self.distance,
            "status": self.status.value,
            "seconds": self.seconds,
            "best_bound": self.best_bound,
            "path": None if self.path is None else self.path.to_dict(),
        }


class GedMethod(ABC):
    """
    Abstract base class for all distance methods.

    Each method is self-contained and can be added to or removed from the
    registry without modifying other methods. Methods declare whether their
    value is exact, an upper bound or a lower bound; the benchmark uses this
    to build the reference matrix.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the name of this method."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Return a description of what this method computes."""
        pass

    @property
    @abstractmethod
    def role(self) -> MethodRole:
        """Return the role of the method's value."""
        pass

    @abstractmethod
    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        """
        Run the method on a graph pair.

        Args:
            g1: Source graph
            g2: Target graph
            cost_model: Cost model
            options: Per-pair settings

        Returns:
            MethodOutcome (seconds is filled in by compute)
        """
        pass

    def is_applicable(self, g1: AttributedGraph, g2: AttributedGraph) -> bool:
        """
        Check if this method can handle the graph pair.

        Override this method for methods restricted to directed or
        undirected graphs. By default, every pair of equal directedness is
        accepted.
        """
        return g1.directed == g2.directed

    def compute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: Optional[MethodOptions] = None,
    ) -> MethodOutcome:
        """
        Time and run the method.

        Raises:
            BenchmarkError: If the method cannot handle the graph pair
        """
        if not self.is_applicable(g1, g2):
            kinds = f"{'directed' if g1.directed else 'undirected'}/{'directed' if g2.directed else 'undirected'}"
            raise BenchmarkError(f"Method '{self.name}' does not apply to {kinds} graphs")
        started = time.perf_counter()
        outcome = self.execute(g1, g2, cost_model, options or MethodOptions())
        outcome.seconds = time.perf_counter() - started
        return outcome
