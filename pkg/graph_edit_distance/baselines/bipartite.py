"""Bipartite (BP) upper bound."""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from graph_edit_distance.baselines.assignment import SENTINEL, edit_assignment, hungarian
from graph_edit_distance.baselines.edit_paths import induced_edit_path
from graph_edit_distance.core.edit_path import EditPath
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel

logger = logging.getLogger(__name__)


def _local_edge_cost(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel,
                     first: Sequence[int], second: Sequence[int]) -> float:
    a1 = [g1.edges[a].attrs for a in first]
    a2 = [g2.edges[b].attrs for b in second]
    cost, _ = edit_assignment(
        [[cost_model.edge_sub(e, f) for f in a2] for e in a1],
        [cost_model.edge_del(e) for e in a1],
        [cost_model.edge_ins(f) for f in a2],
    )
    return cost


def _stars(graph: AttributedGraph, vertex: str) -> List[Sequence[int]]:
    """Edge groups compared between vertices: (out, in) if directed, else incident."""
    if graph.directed:
        return [graph.out_edges[vertex], graph.in_edges[vertex]]
    return [graph.incident_edges[vertex]]


def bp_cost_matrix(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> np.ndarray:
    """
    The (n1+n2) x (n1+n2) BP cost matrix.

    Entries:
        c(i, k) = c_v(i -> k) + optimal assignment of the edges around i to the edges around k
        c(i, eps) = c_v(i -> eps) + sum of deletions of the edges around i
        c(eps, k) = c_v(eps -> k) + sum of insertions of the edges around k
    Off-diagonal deletion and insertion cells hold SENTINEL, the bottom-right block is zero.
    Directed graphs compare out-edges with out-edges and in-edges with in-edges.
    """
    n1, n2 = g1.num_vertices, g2.num_vertices
    size = n1 + n2
    matrix = np.zeros((size, size))
    matrix[:n1, n2:] = SENTINEL
    matrix[n1:, :n2] = SENTINEL
    for p, i in enumerate(g1.vertex_ids):
        stars_i = _stars(g1, i)
        for q, k in enumerate(g2.vertex_ids):
            local = sum(
                _local_edge_cost(g1, g2, cost_model, s1, s2) for s1, s2 in zip(stars_i, _stars(g2, k))
            )
            matrix[p, q] = cost_model.vertex_sub(g1.vertex_attrs[i], g2.vertex_attrs[k]) + local
        deletion = sum(cost_model.edge_del(g1.edges[a].attrs) for star in stars_i for a in star)
        matrix[p, n2 + p] = cost_model.vertex_del(g1.vertex_attrs[i]) + deletion
    for q, k in enumerate(g2.vertex_ids):
        insertion = sum(cost_model.edge_ins(g2.edges[b].attrs) for star in _stars(g2, k) for b in star)
        matrix[n1 + q, q] = cost_model.vertex_ins(g2.vertex_attrs[k]) + insertion
    return matrix


def bp_upper_bound(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> Tuple[float, EditPath]:
    """
    Upper bound from a bipartite vertex assignment.

    The vertex assignment minimizing the BP cost matrix is completed into an
    edit path whose recomputed cost is the bound.

    Returns:
        (cost, EditPath); the cost is >= the exact graph edit distance
    """
    permutation, _ = hungarian(bp_cost_matrix(g1, g2, cost_model))
    n2 = g2.num_vertices
    vertex_map = {
        g1.vertex_ids[p]: g2.vertex_ids[permutation[p]]
        for p in range(g1.num_vertices)
        if permutation[p] < n2
    }
    path = induced_edit_path(g1, g2, cost_model, vertex_map)
    logger.debug("event=bp pair=%s/%s cost=%.6g", g1.graph_id, g2.graph_id, path.total_cost)
    return path.total_cost, path
