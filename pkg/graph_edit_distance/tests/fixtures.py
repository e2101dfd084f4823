"""Seeded graphs and cost models shared by the tests."""

from typing import List, Tuple

import numpy as np

from graph_edit_distance.core.graph import AttributedGraph, Symbol
from graph_edit_distance.costs.base import FunctionCostModel
from graph_edit_distance.costs.factory import CostModelFactory, make_cost_model
from graph_edit_distance.data.synthetic import generate_random_graph


def ilpiso_model():
    return make_cost_model(CostModelFactory.defaults("ilpiso"))


def unit_model() -> FunctionCostModel:
    """Free substitutions, unit deletions and insertions."""
    return FunctionCostModel(
        vertex_sub=lambda a, b: 0.0,
        vertex_del=lambda a: 1.0,
        vertex_ins=lambda a: 1.0,
        edge_sub=lambda a, b: 0.0,
        edge_del=lambda a: 1.0,
        edge_ins=lambda a: 1.0,
        name="unit",
    )


def random_cost_model(seed: int, label_range: int = 3) -> FunctionCostModel:
    """Nonnegative integer cost tables indexed by the 'label' attribute."""
    rng = np.random.default_rng(seed)
    vertex_sub = rng.integers(0, 10, size=(label_range, label_range))
    vertex_del, vertex_ins = rng.integers(1, 10, size=(2, label_range))
    edge_sub = rng.integers(0, 10, size=(label_range, label_range))
    edge_del, edge_ins = rng.integers(1, 10, size=(2, label_range))
    return FunctionCostModel(
        vertex_sub=lambda a, b: vertex_sub[int(a["label"]), int(b["label"])],
        vertex_del=lambda a: vertex_del[int(a["label"])],
        vertex_ins=lambda a: vertex_ins[int(a["label"])],
        edge_sub=lambda a, b: edge_sub[int(a["label"]), int(b["label"])],
        edge_del=lambda a: edge_del[int(a["label"])],
        edge_ins=lambda a: edge_ins[int(a["label"])],
        name=f"table{seed}",
    )


def random_pair(seed: int, n1: int = 4, n2: int = 4, directed: bool = False,
                edge_probability: float = 0.5, label_range: int = 100) -> Tuple[AttributedGraph, AttributedGraph]:
    """Two labelled G(n, p) graphs drawn from consecutive seeds."""
    g1 = generate_random_graph(n1, edge_probability, seed=2 * seed, directed=directed,
                               label_range=label_range, graph_id=f"a{seed}")
    g2 = generate_random_graph(n2, edge_probability, seed=2 * seed + 1, directed=directed,
                               label_range=label_range, graph_id=f"b{seed}")
    return g1, g2


def random_sized_pairs(count: int, directed: bool = False, low: int = 2, high: int = 6, seed: int = 0,
                       label_range: int = 3, density: Tuple[float, float] = (0.2, 0.8)) -> List[Tuple[AttributedGraph, AttributedGraph]]:
    """Pairs whose vertex counts and edge densities are drawn uniformly."""
    rng = np.random.default_rng(seed)
    pairs = []
    for index in range(count):
        n1, n2 = (int(n) for n in rng.integers(low, high + 1, size=2))
        probability = float(rng.uniform(*density))
        pairs.append(random_pair(1000 * (seed + 1) + index, n1, n2, directed, probability, label_range))
    return pairs


def random_pairs(count: int, directed: bool = False, sizes=((3, 3), (3, 4), (4, 3), (4, 4))) -> List[Tuple[AttributedGraph, AttributedGraph]]:
    pairs = []
    for seed in range(count):
        n1, n2 = sizes[seed % len(sizes)]
        pairs.append(random_pair(seed, n1, n2, directed))
    return pairs


def labelled_path(labels, directed: bool = False, graph_id: str = "") -> AttributedGraph:
    """A path whose vertices and edges carry integer 'label' attributes."""
    vertices = [(f"n{i}", {"label": label}) for i, label in enumerate(labels)]
    edges = [(f"e{i}", f"n{i}", f"n{i + 1}", {"label": 0}) for i in range(len(labels) - 1)]
    return AttributedGraph.build(vertices, edges, directed=directed, graph_id=graph_id)


def symbol_star(directed: bool = True) -> AttributedGraph:
    """The K(2,2) source graph of the F1LP/F2LP separation example."""
    vertices = [(str(i), {"chem": Symbol("C")}) for i in (1, 2, 3, 4)]
    edges = [("a", "1", "3", {}), ("b", "1", "4", {}), ("c", "2", "3", {}), ("d", "2", "4", {})]
    return AttributedGraph.build(vertices, edges, directed=directed, graph_id="k22")


def single_edge(directed: bool = True) -> AttributedGraph:
    vertices = [("k", {"chem": Symbol("C")}), ("l", {"chem": Symbol("C")})]
    return AttributedGraph.build(vertices, [("kl", "k", "l", {})], directed=directed, graph_id="edge")


GXL_SAMPLE = """<?xml version="1.0" encoding="UTF-8"?>
<gxl>
  <graph id="sample" edgeids="true" edgemode="undirected">
    <node id="_0">
      <attr name="x"><float>1.5</float></attr>
      <attr name="y"><float>2.25</float></attr>
      <attr name="type"><string>corner</string></attr>
    </node>
    <node id="_1">
      <attr name="x"><float>4.5</float></attr>
      <attr name="y"><float>6.25</float></attr>
      <attr name="type"><string>corner</string></attr>
    </node>
    <node id="_2">
      <attr name="x"><float>0.1</float></attr>
      <attr name="y"><float>0.2</float></attr>
      <attr name="type"><string>endpoint</string></attr>
    </node>
    <edge id="e0" from="_1" to="_0">
      <attr name="type0"><string>line</string></attr>
    </edge>
    <edge from="_1" to="_2">
      <attr name="type0"><string>arc</string></attr>
    </edge>
  </graph>
</gxl>
"""
