"""Translation between solver values and edit paths."""

from typing import Optional, Sequence

import numpy as np

from graph_edit_distance.core.edit_path import EditPath
from graph_edit_distance.core.exceptions import FormulationError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.formulations.model import BlpModel


def _check_shape(model: BlpModel, g1: AttributedGraph, g2: AttributedGraph) -> None:
    shape = (g1.num_vertices, g2.num_vertices, g1.num_edges, g2.num_edges)
    if model.kind == "generic" or model.shape != shape:
        raise FormulationError(
            f"model of kind '{model.kind}' and shape {model.shape} does not encode this graph pair {shape}"
        )


def decode_solution(
    model: BlpModel,
    g1: AttributedGraph,
    g2: AttributedGraph,
    values: Sequence[float],
    cost_model: Optional[CostModel] = None,
    tol: float = 1e-6,
) -> EditPath:
    """
    Turn an integral solution into an edit path.

    Deletions and insertions are deduced from the substitution variables.

    Args:
        model: The solved GED model
        g1: Source graph
        g2: Target graph
        values: Variable values, integral within tol
        cost_model: If given, the path's total cost is recomputed from it
        tol: Integrality and feasibility tolerance

    Returns:
        EditPath satisfying all edit path invariants

    Raises:
        FormulationError: If values are not integral, violate the model or
            decode into an inconsistent path (solver bugs, not user errors)
    """
    _check_shape(model, g1, g2)
    x = np.asarray(values, dtype=float)
    if x.shape != (model.num_variables,):
        raise FormulationError(f"expected {model.num_variables} values, got {x.shape}")
    rounded = np.round(x)
    off = np.flatnonzero(np.abs(x - rounded) > tol)
    if off.size:
        name = model.variables[off[0]].name
        raise FormulationError(f"non-integral solution: {name}={x[off[0]]}")
    broken = model.violations(rounded, tol)
    if broken:
        raise FormulationError(f"solution violates the model: {broken[0]}")

    n1, n2, m1, m2 = model.shape
    x0, y0 = model.layout.get("x", 0), model.layout.get("y", n1 * n2)
    vertex_pairs = [
        (g1.vertex_ids[p], g2.vertex_ids[q])
        for p in range(n1) for q in range(n2)
        if rounded[x0 + p * n2 + q] == 1.0
    ]
    edge_pairs = [
        (g1.edges[a].id, g2.edges[b].id)
        for a in range(m1) for b in range(m2)
        if rounded[y0 + a * m2 + b] == 1.0
    ]
    path = EditPath.from_substitutions(g1, g2, vertex_pairs, edge_pairs, cost_model)
    problems = path.violations(g1, g2)
    if problems:
        raise FormulationError(f"decoded edit path is inconsistent: {problems[0]}")
    return path


def encode_edit_path(model: BlpModel, g1: AttributedGraph, g2: AttributedGraph, path: EditPath) -> np.ndarray:
    """
    Variable values of a model that represent an edit path.

    Used to hand a heuristic edit path to branch-and-bound as incumbent.
    """
    _check_shape(model, g1, g2)
    n1, n2, m1, m2 = model.shape
    values = np.zeros(model.num_variables)
    layout = model.layout
    for i, k in path.vertex_substitutions:
        values[layout.get("x", 0) + g1.vertex_index[i] * n2 + g2.vertex_index[k]] = 1.0
    for ij, kl in path.edge_substitutions:
        values[layout.get("y", n1 * n2) + g1.edge_index[ij] * m2 + g2.edge_index[kl]] = 1.0
    if "u" in layout:
        for i in path.deleted_vertices:
            values[layout["u"] + g1.vertex_index[i]] = 1.0
    if "v" in layout:
        for k in path.inserted_vertices:
            values[layout["v"] + g2.vertex_index[k]] = 1.0
    if "e" in layout:
        for ij in path.deleted_edges:
            values[layout["e"] + g1.edge_index[ij]] = 1.0
    if "f" in layout:
        for kl in path.inserted_edges:
            values[layout["f"] + g2.edge_index[kl]] = 1.0
    return values
