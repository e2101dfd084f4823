"""Exact graph edit distance and LP lower bounds."""

import logging
from typing import Optional, Tuple

from graph_edit_distance.baselines.bipartite import bp_upper_bound
from graph_edit_distance.core.edit_path import EditPath, SolveStatus
from graph_edit_distance.core.exceptions import FormulationError, SolverError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.formulations.builders import build_model
from graph_edit_distance.formulations.decode import decode_solution, encode_edit_path
from graph_edit_distance.formulations.model import relax
from graph_edit_distance.solver.branch_and_bound import solve_bb
from graph_edit_distance.solver.options import SolveOptions, SolveResult
from graph_edit_distance.solver.simplex import solve_lp

logger = logging.getLogger(__name__)

LOWER_BOUND_KINDS = ("f1lp", "f2lp")


def _check_pair(g1: AttributedGraph, g2: AttributedGraph) -> None:
    if g1.directed != g2.directed:
        raise FormulationError(
            f"cannot compare directed and undirected graphs ('{g1.graph_id}', '{g2.graph_id}')"
        )


def compute_ged(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    formulation: str = "auto",
    options: Optional[SolveOptions] = None,
    seed_incumbent: bool = True,
) -> Tuple[SolveResult, Optional[EditPath]]:
    """
    Graph edit distance by branch-and-bound on a BLP formulation.

    Args:
        g1: Source graph
        g2: Target graph
        cost_model: Cost model
        formulation: 'f1', 'f2', 'f2_alt', 'f2u' or 'auto'
        options: Solver options
        seed_incumbent: Start the search from the BP edit path

    Returns:
        (SolveResult, EditPath decoded from the incumbent, None without one)

    Raises:
        FormulationError: On directedness mismatch or unknown formulation
    """
    _check_pair(g1, g2)
    options = options or SolveOptions()
    model = build_model(formulation, g1, g2, cost_model)
    logger.info(
        "event=build pair=%s/%s formulation=%s variables=%d constraints=%d",
        g1.graph_id, g2.graph_id, model.kind, model.num_variables, model.num_constraints,
    )
    incumbent = None
    if seed_incumbent:
        _, seed_path = bp_upper_bound(g1, g2, cost_model)
        incumbent = encode_edit_path(model, g1, g2, seed_path)

    result = solve_bb(model, options, incumbent)
    if not result.status.has_solution:
        return result, None
    path = decode_solution(model, g1, g2, result.values, cost_model)
    return result, path


def solve_relaxation(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    kind: str = "f2lp",
    options: Optional[SolveOptions] = None,
) -> SolveResult:
    """
    Solve the F1LP or F2LP relaxation and return the solver's result.

    f2lp relaxes f2u on undirected pairs and f2 on directed ones. A time
    limit hit before the optimum gives status no_solution_timeout with the
    row-free trivial bound as best_bound.

    Raises:
        FormulationError: On directedness mismatch
        SolverError: On an unknown kind
    """
    _check_pair(g1, g2)
    if kind not in LOWER_BOUND_KINDS:
        raise SolverError(f"Unknown lower bound '{kind}'. Available: {', '.join(LOWER_BOUND_KINDS)}")
    if kind == "f1lp":
        formulation = "f1"
    else:
        formulation = "f2" if g1.directed else "f2u"
    model = relax(build_model(formulation, g1, g2, cost_model))
    result = solve_lp(model, options)
    logger.debug(
        "event=lower_bound kind=%s status=%s bound=%.6g iterations=%d",
        kind, result.status.value, result.best_bound, result.stats.lp_iterations,
    )
    return result


def compute_lower_bound(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    kind: str = "f2lp",
    options: Optional[SolveOptions] = None,
) -> float:
    """
    LP relaxation bound F1LP or F2LP.

    Raises:
        FormulationError: On directedness mismatch
        SolverError: On an unknown kind or if the relaxation is not solved to optimality
    """
    result = solve_relaxation(g1, g2, cost_model, kind, options)
    if result.status is not SolveStatus.OPTIMAL:
        raise SolverError(f"{kind} relaxation ended with status {result.status.value}")
    return result.objective
