"""Linear programming and branch-and-bound solver components."""

from graph_edit_distance.solver.branch_and_bound import solve_bb
from graph_edit_distance.solver.ged import compute_ged, compute_lower_bound, solve_relaxation
from graph_edit_distance.solver.options import SolveOptions, SolveResult, SolveStats
from graph_edit_distance.solver.simplex import solve_lp

__all__ = ["solve_bb", "solve_lp", "compute_ged", "compute_lower_bound", "solve_relaxation", "SolveOptions", "SolveResult", "SolveStats"]
