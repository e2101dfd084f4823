"""Best-bound branch-and-bound with depth-first plunges."""

import heapq
import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.formulations.model import BlpModel
from graph_edit_distance.solver.options import SolveOptions, SolveResult, SolveStats
from graph_edit_distance.solver.simplex import BoundedSimplex, LpBasis, LpStatus, trivial_bound

logger = logging.getLogger(__name__)

# vertex decisions fix the edge decisions, so they are branched on first
_GROUP_PRIORITY = {"x": 0, "u": 1, "v": 1, "y": 2, "e": 3, "f": 3}

Fixing = Tuple[int, float]


@dataclass(order=True)
class _Node:
    bound: float
    seq: int
    depth: int = field(compare=False)
    fixings: Tuple[Fixing, ...] = field(compare=False, default=())
    basis: Optional[LpBasis] = field(compare=False, default=None)


class BranchAndBound:
    """
    Branch-and-bound over a BlpModel.

    Nodes are LP relaxations with some binaries fixed to 0 or 1, solved by
    one BoundedSimplex shared by the whole tree. Children warm start from the
    parent's optimal basis. Open nodes sit in a heap ordered by (bound,
    creation order); after each branching the child in the rounded direction
    is explored immediately and its sibling is queued.
    """

    def __init__(self, model: BlpModel, options: Optional[SolveOptions] = None):
        self.model = model
        self.options = options or SolveOptions()
        self.engine = BoundedSimplex.from_model(model, tol=self.options.lp_tol)
        self._binary = model.binary_mask
        self._priority = np.array([_GROUP_PRIORITY.get(v.group, 4) for v in model.variables], dtype=int)
        self._rng = np.random.default_rng(self.options.deterministic_seed)
        self._seq = itertools.count()

        self.incumbent: Optional[np.ndarray] = None
        self.incumbent_value = np.inf
        self.stats = SolveStats()
        self._incumbent_trace: List[float] = []
        self._bound_trace: List[float] = []
        self._global_bound = -np.inf
        self._pruned_bound = np.inf
        self._started = 0.0
        self._deadline = 0.0

    # --- incumbent ------------------------------------------------------------

    def offer(self, values: Sequence[float], source: str = "seed") -> bool:
        """
        Try a candidate assignment as the incumbent.

        Returns:
            True if it was feasible and improved the incumbent
        """
        candidate = np.asarray(values, dtype=float).copy()
        if candidate.shape != (self.model.num_variables,):
            logger.warning("event=incumbent_rejected source=%s reason=wrong_length", source)
            return False
        candidate[self._binary] = np.round(candidate[self._binary])
        broken = self.model.violations(candidate, tol=max(self.options.integrality_tol, 1e-6))
        if broken:
            logger.warning("event=incumbent_rejected source=%s reason=%s", source, broken[0].replace(" ", "_"))
            return False
        value = self.model.evaluate(candidate)
        if value >= self.incumbent_value - 1e-12:
            return False
        self.incumbent = candidate
        self.incumbent_value = value
        self._incumbent_trace.append(value)
        self._log("incumbent", self._global_bound, source=source)
        return True

    def _cutoff(self) -> float:
        if not np.isfinite(self.incumbent_value):
            return np.inf
        return self.incumbent_value - self.options.gap_tolerance(self.incumbent_value)

    # --- branching ------------------------------------------------------------

    def _branch_variable(self, x: np.ndarray) -> Optional[int]:
        distance = np.abs(x - np.round(x))
        fractional = np.flatnonzero(self._binary & (distance > self.options.integrality_tol))
        if fractional.size == 0:
            return None
        priority = self._priority[fractional]
        rule = self.options.branching
        if rule == "most_fractional":
            order = np.lexsort((fractional, -distance[fractional], priority))
            return int(fractional[order[0]])
        if rule == "first_fractional":
            order = np.lexsort((fractional, priority))
            return int(fractional[order[0]])
        return int(fractional[self._rng.integers(fractional.size)])

    # --- search ---------------------------------------------------------------

    def _out_of_budget(self) -> bool:
        if time.monotonic() > self._deadline:
            return True
        return self.options.max_nodes is not None and self.stats.nodes >= self.options.max_nodes

    def _solve_node(self, node: _Node):
        n = self.model.num_variables
        lower = np.zeros(n)
        upper = np.ones(n)
        for index, value in node.fixings:
            lower[index] = upper[index] = value
        outcome = self.engine.solve(lower, upper, basis=node.basis, deadline=self._deadline)
        self.stats.nodes += 1
        self.stats.lp_iterations += outcome.iterations
        return outcome

    def _raise_bound(self, bound: float) -> None:
        bound = min(bound, self.incumbent_value, self._pruned_bound)
        if bound > self._global_bound:
            self._global_bound = bound
            self._bound_trace.append(bound)

    def _open_bound(self, heap: List[_Node]) -> float:
        return min((node.bound for node in heap), default=np.inf)

    def solve(self, incumbent: Optional[Sequence[float]] = None) -> SolveResult:
        """
        Run the search.

        Args:
            incumbent: Optional starting solution; ignored with a warning if infeasible

        Returns:
            SolveResult with status optimal, feasible_timeout,
            no_solution_timeout, infeasible or unbounded
        """
        self._started = time.monotonic()
        self._deadline = self._started + self.options.time_limit
        if incumbent is not None:
            self.offer(incumbent, source="seed")

        heap: List[_Node] = [_Node(trivial_bound(self.model), next(self._seq), 0)]
        self._raise_bound(heap[0].bound)
        stopped = False
        unbounded = False

        while heap and not stopped:
            node = heapq.heappop(heap)
            if node.bound >= self._cutoff():
                self._pruned_bound = min(self._pruned_bound, node.bound)
                continue
            current: Optional[_Node] = node
            while current is not None:
                if self._out_of_budget():
                    heapq.heappush(heap, current)
                    stopped = True
                    break
                outcome = self._solve_node(current)
                if outcome.status is LpStatus.TIME_LIMIT:
                    heapq.heappush(heap, current)
                    stopped = True
                    break
                if outcome.status is LpStatus.UNBOUNDED:
                    unbounded = True
                    stopped = True
                    break
                if outcome.status is LpStatus.INFEASIBLE:
                    break

                bound = max(current.bound, self.model.constant + outcome.objective)
                if current.depth == 0:
                    self._raise_bound(bound)
                    self._log("root", bound)
                if bound >= self._cutoff():
                    self._pruned_bound = min(self._pruned_bound, bound)
                    break
                j = self._branch_variable(outcome.x)
                if j is None:
                    self.offer(outcome.x, source="lp")
                    break

                up_first = outcome.x[j] >= 0.5
                near, far = (1.0, 0.0) if up_first else (0.0, 1.0)
                depth = current.depth + 1
                heapq.heappush(heap, _Node(bound, next(self._seq), depth, current.fixings + ((j, far),), outcome.basis))
                current = _Node(bound, next(self._seq), depth, current.fixings + ((j, near),), outcome.basis)

                if self.stats.nodes % self.options.log_interval == 0:
                    self._raise_bound(min(self._open_bound(heap), bound))
                    self._log("progress", self._global_bound, open=len(heap))
            if not stopped and heap:
                self._raise_bound(self._open_bound(heap))

        return self._finish(heap, stopped, unbounded)

    def _finish(self, heap: List[_Node], stopped: bool, unbounded: bool) -> SolveResult:
        self.stats.wall_time = time.monotonic() - self._started
        if unbounded:
            status, objective, bound = SolveStatus.UNBOUNDED, -np.inf, -np.inf
        elif stopped:
            bound = max(self._global_bound, min(self._open_bound(heap), self._pruned_bound, self.incumbent_value))
            if self.incumbent is None:
                status, objective = SolveStatus.NO_SOLUTION_TIMEOUT, np.inf
            else:
                status, objective = SolveStatus.FEASIBLE_TIMEOUT, self.incumbent_value
            if self.incumbent is not None and bound >= self._cutoff():
                status = SolveStatus.OPTIMAL
        elif self.incumbent is None:
            status, objective, bound = SolveStatus.INFEASIBLE, np.inf, np.inf
        else:
            status, objective = SolveStatus.OPTIMAL, self.incumbent_value
            bound = min(self._pruned_bound, objective)
        bound = min(bound, objective)
        self._raise_bound(bound)
        self.stats.incumbent_trace = tuple(self._incumbent_trace)
        self.stats.bound_trace = tuple(self._bound_trace)
        self._log("done", bound, status=status.value)
        values = None if self.incumbent is None else self.incumbent.copy()
        return SolveResult(status, objective, bound, values, self.stats)

    def _log(self, event: str, bound: float, **extra) -> None:
        objective = self.incumbent_value
        gap = (objective - bound) / max(1.0, abs(objective)) if np.isfinite(objective) and np.isfinite(bound) else np.inf
        tail = "".join(f" {key}={value}" for key, value in extra.items())
        logger.info(
            "event=%s node=%d objective=%.6g bound=%.6g gap=%.4g time=%.3f%s",
            event, self.stats.nodes, objective, bound, gap, time.monotonic() - self._started, tail,
        )


def solve_bb(
    model: BlpModel,
    options: Optional[SolveOptions] = None,
    incumbent: Optional[Sequence[float]] = None,
) -> SolveResult:
    """
    Solve a binary model to optimality or until the time limit.

    Args:
        model: Model to solve; relaxed variables are never branched on
        options: Solver options
        incumbent: Optional feasible assignment to start from

    Returns:
        SolveResult; on timeout the best incumbent and a valid global lower bound
    """
    return BranchAndBound(model, options).solve(incumbent)
