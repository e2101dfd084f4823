"""Bounding methods: LP relaxations, HED, BP and beam search."""

from graph_edit_distance.baselines.bipartite import bp_upper_bound
from graph_edit_distance.baselines.hausdorff import hausdorff_ged
from graph_edit_distance.baselines.search import beam_search
from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.exceptions import SolverError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.methods.base import GedMethod, MethodOptions, MethodOutcome, MethodRole
from graph_edit_distance.solver.ged import solve_relaxation


class RelaxationMethod(GedMethod):
    """Optimum of the continuous relaxation of F1 or F2."""

    def __init__(self, kind: str):
        self.kind = kind

    @property
    def name(self) -> str:
        return self.kind

    @property
    def description(self) -> str:
        return f"Lower bound from the {self.kind[:2].upper()} linear relaxation"

    @property
    def role(self) -> MethodRole:
        return MethodRole.LOWER_BOUND

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        result = solve_relaxation(g1, g2, cost_model, self.kind, options.solve_options())
        if result.status is SolveStatus.OPTIMAL:
            return MethodOutcome(distance=result.objective, status=SolveStatus.OPTIMAL, best_bound=result.objective)
        if result.status is SolveStatus.NO_SOLUTION_TIMEOUT:
            # the trivial bound still bounds the distance from below
            return MethodOutcome(distance=result.best_bound, status=result.status, best_bound=result.best_bound)
        raise SolverError(f"{self.kind} relaxation ended with status {result.status.value}")


class HausdorffMethod(GedMethod):
    """Hausdorff edit distance."""

    @property
    def name(self) -> str:
        return "hed"

    @property
    def description(self) -> str:
        return "Hausdorff edit distance lower bound"

    @property
    def role(self) -> MethodRole:
        return MethodRole.LOWER_BOUND

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        return MethodOutcome(distance=hausdorff_ged(g1, g2, cost_model), status=SolveStatus.HEURISTIC)


class BipartiteMethod(GedMethod):
    """BP: vertex assignment completed into an edit path."""

    @property
    def name(self) -> str:
        return "bp"

    @property
    def description(self) -> str:
        return "Bipartite assignment upper bound"

    @property
    def role(self) -> MethodRole:
        return MethodRole.UPPER_BOUND

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        cost, path = bp_upper_bound(g1, g2, cost_model)
        return MethodOutcome(distance=cost, status=SolveStatus.HEURISTIC, path=path)


class BeamMethod(GedMethod):
    """Beam search with width options.beam_width."""

    @property
    def name(self) -> str:
        return "beam"

    @property
    def description(self) -> str:
        return "Beam search upper bound"

    @property
    def role(self) -> MethodRole:
        return MethodRole.UPPER_BOUND

    def execute(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        cost_model: CostModel,
        options: MethodOptions,
    ) -> MethodOutcome:
        cost, path = beam_search(g1, g2, cost_model, options.beam_width)
        return MethodOutcome(distance=cost, status=SolveStatus.HEURISTIC, path=path)
