"""Exact methods: branch-and-bound on a BLP formulation, and A*."""

from graph_edit_distance.baselines.search import astar_ged
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.methods.base import GedMethod, MethodOptions, MethodOutcome, MethodRole
from graph_edit_distance.solver.ged import compute_ged

_DIRECTED_ONLY = {"f2", "f2_alt"}
_UNDIRECTED_ONLY = {"f2u"}


class FormulationMethod(GedMethod):
    """Solve one of F1, F2, F2-alt or F2u to optimality (or the time limit)."""

    def __init__(self, formulation: str):
        self.formulation = formulation

    @property
    def name(self) -> str:
        return self.formulation

    @property
    def description(self) -> str:
        return f"Branch-and-bound on the {self.formulation.upper()} binary linear program"

    @property
    def role(self) -> MethodRole:
        return MethodRole.EXACT

    def is_applicable(self, g1: AttributedGraph, g2: AttributedGraph) -> bool:
        if not super().is_applicable(g1, g2):
            return False
        if self.formulation in _DIRECTED_ONLY:
            return g1.directed
        if self.formulation in _UNDIRECTED_ONLY:
            return not g1.directed
        return True

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        result, path = compute_ged(
            g1, g2, cost_model, self.formulation, options.solve_options(), options.seed_incumbent
        )
        return MethodOutcome(
            distance=result.objective,
            status=result.status,
            path=path,
            best_bound=result.best_bound,
        )


class AStarMethod(GedMethod):
    """A* over vertex maps with a bipartite vertex heuristic."""

    @property
    def name(self) -> str:
        return "astar"

    @property
    def description(self) -> str:
        return "A* tree search with an assignment heuristic"

    @property
    def role(self) -> MethodRole:
        return MethodRole.EXACT

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        result = astar_ged(g1, g2, cost_model, options.astar_memory_limit, options.time_limit)
        return MethodOutcome(distance=result.cost, status=result.status, path=result.path)
