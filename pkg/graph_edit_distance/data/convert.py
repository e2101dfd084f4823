"""Conversion between AttributedGraph and networkx graphs."""

import networkx as nx

from graph_edit_distance.core.graph import AttributedGraph


def to_networkx(graph: AttributedGraph) -> nx.MultiGraph:
    """
    Convert to a networkx multigraph.

    Edge ids become edge keys, so parallel edges survive the conversion.

    Returns:
        nx.MultiDiGraph for directed graphs, nx.MultiGraph otherwise
    """
    result = nx.MultiDiGraph() if graph.directed else nx.MultiGraph()
    result.graph["graph_id"] = graph.graph_id
    for vid in graph.vertex_ids:
        result.add_node(vid, **graph.vertex_attrs[vid])
    for edge in graph.edges:
        result.add_edge(edge.head, edge.tail, key=edge.id, **edge.attrs)
    return result


def from_networkx(nx_graph: nx.Graph, graph_id: str = "") -> AttributedGraph:
    """
    Convert a networkx graph.

    Node ids are converted with str(). Edge ids are taken from multigraph
    keys, then from an 'id' edge attribute, and are generated as
    'e<ordinal>' otherwise.

    Raises:
        GraphValidationError: If the converted graph violates the invariants
    """
    vertices = [(str(node), dict(data)) for node, data in nx_graph.nodes(data=True)]
    edges = []
    if nx_graph.is_multigraph():
        items = nx_graph.edges(keys=True, data=True)
        for ordinal, (head, tail, key, data) in enumerate(items):
            attrs = dict(data)
            attrs.pop("id", None)
            edges.append((str(key) if isinstance(key, str) else f"e{ordinal}", str(head), str(tail), attrs))
    else:
        for ordinal, (head, tail, data) in enumerate(nx_graph.edges(data=True)):
            attrs = dict(data)
            edge_id = attrs.pop("id", f"e{ordinal}")
            edges.append((str(edge_id), str(head), str(tail), attrs))

    gid = graph_id or str(nx_graph.graph.get("graph_id", nx_graph.graph.get("gid", "")))
    return AttributedGraph.build(vertices, edges, directed=nx_graph.is_directed(), graph_id=gid)
