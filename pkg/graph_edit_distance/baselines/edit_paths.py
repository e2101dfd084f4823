"""Edit path completion from a vertex map."""

from typing import Dict, List, Mapping, Tuple

from graph_edit_distance.core.edit_path import EditPath
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.baselines.assignment import edit_assignment

BundleKey = Tuple[str, str]


def edge_bundles(graph: AttributedGraph) -> Dict[BundleKey, List[int]]:
    """Endpoint key -> indices of the edges joining those endpoints."""
    bundles: Dict[BundleKey, List[int]] = {}
    for index, edge in enumerate(graph.edges):
        bundles.setdefault(graph.endpoint_key(edge.head, edge.tail), []).append(index)
    return bundles


def bundle_assignment(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    first: List[int],
    second: List[int],
) -> Tuple[float, List[Tuple[int, int]]]:
    """
    Cheapest completion of two parallel-edge bundles.

    Returns:
        (cost, substituted (edge index in g1, edge index in g2) pairs)
    """
    a1 = [g1.edges[a].attrs for a in first]
    a2 = [g2.edges[b].attrs for b in second]
    if len(first) == 1 and len(second) == 1:
        sub = cost_model.edge_sub(a1[0], a2[0])
        split = cost_model.edge_del(a1[0]) + cost_model.edge_ins(a2[0])
        return (sub, [(first[0], second[0])]) if sub <= split else (split, [])
    substitution = [[cost_model.edge_sub(e, f) for f in a2] for e in a1]
    cost, pairs = edit_assignment(
        substitution,
        [cost_model.edge_del(e) for e in a1],
        [cost_model.edge_ins(f) for f in a2],
    )
    return cost, [(first[i], second[k]) for i, k in pairs]


def induced_edit_path(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    vertex_map: Mapping[str, str],
) -> EditPath:
    """
    Complete a vertex map into an edit path.

    Edges of G1 whose endpoints are both mapped are grouped with the G2 edges
    between the image endpoints and matched by an optimal assignment; all
    other edges are deleted or inserted. On simple graphs this is the unique
    completion consistent with the vertex map.

    Args:
        g1: Source graph
        g2: Target graph
        cost_model: Cost model
        vertex_map: Injective partial map from G1 vertex ids to G2 vertex ids

    Returns:
        EditPath with total_cost computed from cost_model
    """
    bundles_2 = edge_bundles(g2)
    grouped: Dict[BundleKey, List[int]] = {}
    for key, indices in edge_bundles(g1).items():
        head, tail = key
        if head in vertex_map and tail in vertex_map:
            image = g2.endpoint_key(vertex_map[head], vertex_map[tail])
            grouped.setdefault(image, []).extend(indices)

    edge_pairs = []
    for image, first in grouped.items():
        second = bundles_2.get(image, [])
        if not second:
            continue
        _, pairs = bundle_assignment(g1, g2, cost_model, first, second)
        edge_pairs.extend((g1.edges[a].id, g2.edges[b].id) for a, b in pairs)

    return EditPath.from_substitutions(g1, g2, vertex_map.items(), edge_pairs, cost_model)
