"""Synthetic Erdos-Renyi datasets with scalar labels."""

import random
from typing import Iterable, List

import networkx as nx

from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.data.convert import from_networkx


def generate_random_graph(
    num_vertices: int,
    edge_probability: float,
    seed: int,
    directed: bool = False,
    label_range: int = 100,
    graph_id: str = "",
) -> AttributedGraph:
    """
    Draw one G(n, p) graph and label its vertices and edges.

    Every vertex and edge gets an integer 'label' in [0, label_range).

    Args:
        num_vertices: Number of vertices
        edge_probability: Probability of each edge
        seed: Seed of both the graph draw and the labels
        directed: Draw a directed graph
        label_range: Exclusive upper bound of the labels
        graph_id: Identifier of the generated graph

    Returns:
        The labelled graph
    """
    nx_graph = nx.gnp_random_graph(num_vertices, edge_probability, seed=seed, directed=directed)
    rng = random.Random(seed)
    for node in nx_graph.nodes:
        nx_graph.nodes[node]["label"] = rng.randrange(label_range)
    for head, tail in nx_graph.edges:
        nx_graph.edges[head, tail]["label"] = rng.randrange(label_range)
    return from_networkx(nx_graph, graph_id=graph_id)


def generate_random_dataset(
    sizes: Iterable[int],
    graphs_per_size: int,
    edge_probability: float = 0.3,
    seed: int = 0,
    directed: bool = False,
    label_range: int = 100,
) -> List[AttributedGraph]:
    """
    Generate a dataset of labelled random graphs grouped by vertex count.

    Graph ids are 'g<size>_<index>'; the same arguments always yield the
    same graphs.
    """
    rng = random.Random(seed)
    graphs = []
    for size in sizes:
        for index in range(graphs_per_size):
            graphs.append(generate_random_graph(
                size,
                edge_probability,
                seed=rng.randrange(2 ** 31),
                directed=directed,
                label_range=label_range,
                graph_id=f"g{size}_{index}",
            ))
    return graphs
