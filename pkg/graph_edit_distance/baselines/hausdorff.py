"""Hausdorff edit distance (HED) lower bound."""

from typing import Callable, Sequence

import numpy as np

from graph_edit_distance.core.graph import AttributeMap, AttributedGraph
from graph_edit_distance.costs.base import CostModel


def _hausdorff_sum(
    first: Sequence[AttributeMap],
    second: Sequence[AttributeMap],
    sub: Callable[[AttributeMap, AttributeMap], float],
    delete: Callable[[AttributeMap], float],
    insert: Callable[[AttributeMap], float],
) -> float:
    deletion = np.array([delete(a) for a in first])
    insertion = np.array([insert(b) for b in second])
    if not first or not second:
        return float(deletion.sum() + insertion.sum())
    # a substitution is seen from both sides, so each side pays half
    half = np.array([[sub(a, b) for b in second] for a in first]) / 2.0
    rows = np.minimum(deletion, half.min(axis=1))
    cols = np.minimum(insertion, half.min(axis=0))
    return float(rows.sum() + cols.sum())


def hausdorff_ged(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> float:
    """
    Hausdorff edit distance.

    Every vertex (and separately every edge) is charged the cheaper of its
    own deletion or insertion and half its best substitution in the other
    graph. Needs O(n1 n2 + m1 m2) cost evaluations and never exceeds the
    graph edit distance.
    """
    vertex_part = _hausdorff_sum(
        [g1.vertex_attrs[v] for v in g1.vertex_ids],
        [g2.vertex_attrs[v] for v in g2.vertex_ids],
        cost_model.vertex_sub,
        cost_model.vertex_del,
        cost_model.vertex_ins,
    )
    edge_part = _hausdorff_sum(
        [e.attrs for e in g1.edges],
        [e.attrs for e in g2.edges],
        cost_model.edge_sub,
        cost_model.edge_del,
        cost_model.edge_ins,
    )
    return vertex_part + edge_part
