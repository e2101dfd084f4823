"""Heuristic and bounding baselines from the graph matching literature."""

from graph_edit_distance.baselines.assignment import hungarian
from graph_edit_distance.baselines.bipartite import bp_upper_bound
from graph_edit_distance.baselines.edit_paths import induced_edit_path
from graph_edit_distance.baselines.hausdorff import hausdorff_ged
from graph_edit_distance.baselines.search import astar_ged, beam_search

__all__ = ["hungarian", "bp_upper_bound", "induced_edit_path", "hausdorff_ged", "astar_ged", "beam_search"]
