"""Tests for the attributed graph model."""

import pickle
import unittest

from graph_edit_distance.core.exceptions import GraphValidationError
from graph_edit_distance.core.graph import (
    AttributedGraph,
    Edge,
    Symbol,
    empty_graph,
    reversed_view,
    structurally_equal,
)
from graph_edit_distance.data.convert import from_networkx, to_networkx
from graph_edit_distance.tests.fixtures import labelled_path, random_pair


class TestAttributedGraph(unittest.TestCase):
    """Test cases for graph construction and invariants."""

    def test_build_keeps_declaration_order(self):
        graph = labelled_path([5, 7, 9])
        self.assertEqual(graph.vertex_ids, ("n0", "n1", "n2"))
        self.assertEqual([e.id for e in graph.edges], ["e0", "e1"])
        self.assertEqual(graph.vertex_index["n2"], 2)
        self.assertEqual(graph.num_vertices, 3)
        self.assertEqual(graph.num_edges, 2)

    def test_undirected_edges_are_canonicalized(self):
        graph = AttributedGraph.build(
            [("a", {}), ("b", {})], [("ba", "b", "a", {})], directed=False
        )
        self.assertEqual((graph.edges[0].head, graph.edges[0].tail), ("a", "b"))
        self.assertEqual(graph.endpoint_key("b", "a"), ("a", "b"))

    def test_directed_edges_keep_orientation(self):
        graph = AttributedGraph.build([("a", {}), ("b", {})], [("ba", "b", "a", {})], directed=True)
        self.assertEqual((graph.edges[0].head, graph.edges[0].tail), ("b", "a"))
        self.assertEqual(graph.out_edges["b"], (0,))
        self.assertEqual(graph.in_edges["a"], (0,))

    def test_dangling_endpoint_is_rejected(self):
        with self.assertRaises(GraphValidationError) as caught:
            AttributedGraph.build([("a", {})], [("e", "a", "z", {})])
        kinds = [v.kind for v in caught.exception.violations]
        self.assertIn("dangling_endpoint", kinds)

    def test_duplicate_edge_id_is_rejected(self):
        with self.assertRaises(GraphValidationError):
            AttributedGraph.build([("a", {}), ("b", {})], [("e", "a", "b", {}), ("e", "b", "a", {})])

    def test_bad_attribute_values_are_reported(self):
        with self.assertRaises(GraphValidationError) as caught:
            AttributedGraph.build([("a", {"flag": True, "x": float("nan"), "s": Symbol("")})], [])
        kinds = sorted(v.kind for v in caught.exception.violations)
        self.assertEqual(kinds, ["bad_attribute_type", "empty_symbol", "non_finite_number"])

    def test_violations_returned_as_data(self):
        graph = AttributedGraph(("a",), {"a": {}}, (Edge("e", "a", "b"),), True, "broken")
        violations = graph.violations()
        self.assertEqual(len(violations), 1)
        self.assertEqual(violations[0].kind, "dangling_endpoint")

    def test_loops_and_parallel_edges(self):
        graph = AttributedGraph.build(
            [("a", {}), ("b", {})],
            [("l", "a", "a", {}), ("p", "a", "b", {}), ("q", "b", "a", {})],
            directed=False,
        )
        self.assertTrue(graph.has_loops)
        self.assertTrue(graph.has_parallel_edges)
        self.assertEqual(graph.incident_edges["a"], (0, 1, 2))

    def test_empty_graph(self):
        graph = empty_graph(directed=False)
        self.assertEqual(graph.num_vertices, 0)
        self.assertEqual(graph.violations(), [])


class TestSymbol(unittest.TestCase):
    """Test cases for symbolic attribute values."""

    def test_symbol_equals_plain_string(self):
        self.assertEqual(Symbol("C"), "C")
        self.assertEqual(hash(Symbol("C")), hash("C"))

    def test_symbol_survives_pickling(self):
        value = pickle.loads(pickle.dumps(Symbol("N")))
        self.assertIsInstance(value, Symbol)
        self.assertEqual(value, "N")


class TestGraphComparison(unittest.TestCase):
    """Test cases for structural equality, reordering and networkx conversion."""

    def test_structural_equality_checks_value_kinds(self):
        g1 = AttributedGraph.build([("a", {"t": Symbol("x")})], [])
        g2 = AttributedGraph.build([("a", {"t": "x"})], [])
        self.assertFalse(structurally_equal(g1, g2))
        self.assertTrue(structurally_equal(g1, g1))

    def test_reversed_view_keeps_edges(self):
        graph, _ = random_pair(3, 4, 4)
        view = reversed_view(graph)
        self.assertEqual(view.vertex_ids, tuple(reversed(graph.vertex_ids)))
        self.assertEqual({e.id for e in view.edges}, {e.id for e in graph.edges})
        self.assertEqual(view.violations(), [])

    def test_networkx_round_trip(self):
        graph = AttributedGraph.build(
            [("a", {"label": 1}), ("b", {"label": 2})],
            [("p", "a", "b", {"label": 3}), ("q", "a", "b", {"label": 4})],
            directed=True,
            graph_id="multi",
        )
        nx_graph = to_networkx(graph)
        self.assertEqual(nx_graph.number_of_edges(), 2)
        self.assertTrue(structurally_equal(from_networkx(nx_graph), graph))


if __name__ == '__main__':
    unittest.main()
