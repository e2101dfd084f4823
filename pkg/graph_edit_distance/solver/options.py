"""Solver options and results."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.exceptions import SolverError

BRANCHING_RULES = ("most_fractional", "first_fractional", "random_fractional")


@dataclass(frozen=True)
class SolveOptions:
    """
    Options of the LP and branch-and-bound solvers.

    Attributes:
        time_limit: Wall-clock limit in seconds
        integrality_tol: Distance to 0/1 under which a value counts as integral
        lp_tol: Primal and dual feasibility tolerance of the simplex
        branching: Branching rule, one of BRANCHING_RULES
        deterministic_seed: Seed of the random_fractional rule
        mip_gap: Relative gap at which an incumbent is declared optimal
        abs_gap: Absolute gap added to the relative one
        log_interval: Emit a progress line every this many nodes
        max_nodes: Optional node limit, reported like a timeout
    """
    time_limit: float = 300.0
    integrality_tol: float = 1e-6
    lp_tol: float = 1e-9
    branching: str = "most_fractional"
    deterministic_seed: int = 0
    mip_gap: float = 1e-6
    abs_gap: float = 1e-9
    log_interval: int = 1000
    max_nodes: Optional[int] = None

    def __post_init__(self):
        if not self.time_limit > 0:
            raise SolverError(f"time_limit must be positive, got {self.time_limit}")
        for name in ("integrality_tol", "lp_tol", "mip_gap", "abs_gap"):
            if not getattr(self, name) > 0:
                raise SolverError(f"{name} must be positive, got {getattr(self, name)}")
        if self.branching not in BRANCHING_RULES:
            raise SolverError(f"Unknown branching rule '{self.branching}'. Available: {', '.join(BRANCHING_RULES)}")
        if self.log_interval < 1:
            raise SolverError("log_interval must be at least 1")

    def gap_tolerance(self, objective: float) -> float:
        """Largest incumbent-bound gap still reported as optimal."""
        return self.mip_gap * abs(objective) + self.abs_gap


@dataclass
class SolveStats:
    """Work counters of one solve."""
    nodes: int = 0
    lp_iterations: int = 0
    wall_time: float = 0.0
    incumbent_trace: Tuple[float, ...] = ()
    bound_trace: Tuple[float, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"nodes": self.nodes, "lp_iterations": self.lp_iterations, "wall_time": self.wall_time}


@dataclass
class SolveResult:
    """
    Result of solve_lp or solve_bb.

    Attributes:
        status: Termination status
        objective: Objective of the returned values (inf without a solution)
        best_bound: Valid global lower bound
        values: Variable assignment, None without a solution
        stats: Work counters
    """
    status: SolveStatus
    objective: float
    best_bound: float
    values: Optional[np.ndarray] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def gap(self) -> float:
        return self.objective - self.best_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "objective": self.objective,
            "best_bound": self.best_bound,
            **self.stats.to_dict(),
        }
