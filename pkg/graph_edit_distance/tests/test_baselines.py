"""Tests for the assignment solver and the heuristic baselines."""

import unittest

import numpy as np
from scipy.optimize import linear_sum_assignment

from graph_edit_distance.baselines.assignment import SENTINEL, assignment_matrix, edit_assignment, hungarian
from graph_edit_distance.baselines.bipartite import bp_cost_matrix, bp_upper_bound
from graph_edit_distance.baselines.edit_paths import bundle_assignment, edge_bundles, induced_edit_path
from graph_edit_distance.baselines.hausdorff import hausdorff_ged
from graph_edit_distance.baselines.search import astar_ged, beam_search
from graph_edit_distance.core.edit_path import SolveStatus, edit_path_cost
from graph_edit_distance.core.exceptions import AssignmentError
from graph_edit_distance.core.graph import AttributedGraph, empty_graph
from graph_edit_distance.tests.fixtures import ilpiso_model, labelled_path, random_pair, random_pairs, random_sized_pairs
from graph_edit_distance.tests.oracles import brute_force_assignment, brute_force_ged, random_cost_rows


class TestHungarian(unittest.TestCase):
    """Test cases for the linear sum assignment solver."""

    def test_matches_enumeration_and_scipy(self):
        rng = np.random.default_rng(4)
        for index in range(200):
            size = int(rng.integers(1, 8))
            costs = np.array(random_cost_rows(rng, size))
            if index % 4 == 0:
                costs = np.round(costs)
            permutation, total = hungarian(costs)
            label = f"matrix {index} of size {size}"
            self.assertEqual(sorted(permutation), list(range(size)), msg=label)
            self.assertAlmostEqual(total, costs[np.arange(size), permutation].sum(), msg=label)
            rows, cols = linear_sum_assignment(costs)
            self.assertAlmostEqual(total, costs[rows, cols].sum(), places=9, msg=label)
            self.assertAlmostEqual(total, brute_force_assignment(costs), places=9, msg=label)

    def test_empty_matrix(self):
        self.assertEqual(hungarian(np.zeros((0, 0))), ([], 0.0))

    def test_rejects_bad_input(self):
        with self.assertRaises(AssignmentError):
            hungarian(np.zeros((2, 3)))
        with self.assertRaises(AssignmentError):
            hungarian([[0.0, np.inf], [1.0, 0.0]])

    def test_assignment_matrix_layout(self):
        matrix = assignment_matrix([[1.0, 2.0]], [5.0], [6.0, 7.0])
        self.assertEqual(matrix.shape, (3, 3))
        self.assertEqual(matrix[0, 2], 5.0)
        self.assertEqual(matrix[1, 0], 6.0)
        self.assertEqual(matrix[2, 1], 7.0)
        self.assertEqual(matrix[1, 1], SENTINEL)
        self.assertEqual(matrix[1, 2], 0.0)

    def test_edit_assignment(self):
        cost, pairs = edit_assignment([[1.0, 9.0], [9.0, 9.0]], [3.0, 3.0], [4.0, 4.0])
        self.assertAlmostEqual(cost, 1.0 + 3.0 + 4.0)
        self.assertEqual(pairs, [(0, 0)])
        self.assertEqual(edit_assignment([], [], [2.0, 3.0]), (5.0, []))
        self.assertEqual(edit_assignment([[], []], [1.0, 1.5], []), (2.5, []))


class TestEditPathCompletion(unittest.TestCase):
    """Test cases for completing a vertex map into an edit path."""

    def setUp(self):
        """Set up test fixtures."""
        self.cost_model = ilpiso_model()

    def test_parallel_edges_are_bundled(self):
        multi = AttributedGraph.build(
            [("a", {"label": 1}), ("b", {"label": 2})],
            [("p", "a", "b", {"label": 1}), ("q", "b", "a", {"label": 5})],
            directed=False,
        )
        bundles = edge_bundles(multi)
        self.assertEqual(list(bundles.values()), [[0, 1]])
        cost, pairs = bundle_assignment(multi, multi, self.cost_model, [0, 1], [0, 1])
        self.assertAlmostEqual(cost, 0.0)
        self.assertEqual(len(pairs), 2)

    def test_identity_map_costs_nothing(self):
        g1, _ = random_pair(3, 4, 4, directed=True)
        path = induced_edit_path(g1, g1, self.cost_model, {v: v for v in g1.vertex_ids})
        self.assertAlmostEqual(path.total_cost, 0.0)
        self.assertEqual(len(path.edge_substitutions), g1.num_edges)

    def test_empty_map_deletes_and_inserts_everything(self):
        g1, g2 = random_pair(4, 3, 4)
        path = induced_edit_path(g1, g2, self.cost_model, {})
        expected = 33.3 * (g1.num_vertices + g2.num_vertices + g1.num_edges + g2.num_edges)
        self.assertAlmostEqual(path.total_cost, expected)
        self.assertEqual(path.violations(g1, g2), [])


class TestBipartite(unittest.TestCase):
    """Test cases for the BP upper bound."""

    def setUp(self):
        """Set up test fixtures."""
        self.cost_model = ilpiso_model()

    def test_is_an_upper_bound_with_a_valid_path(self):
        for directed in (True, False):
            for g1, g2 in random_pairs(4, directed):
                cost, path = bp_upper_bound(g1, g2, self.cost_model)
                self.assertGreaterEqual(cost, brute_force_ged(g1, g2, self.cost_model) - 1e-9)
                self.assertEqual(path.violations(g1, g2), [])
                self.assertAlmostEqual(edit_path_cost(path, g1, g2, self.cost_model), cost)

    def test_identical_graphs(self):
        graph = labelled_path([1, 20, 40, 60])
        cost, path = bp_upper_bound(graph, graph, self.cost_model)
        self.assertAlmostEqual(cost, 0.0)
        self.assertEqual(path.vertex_map, {v: v for v in graph.vertex_ids})

    def test_cost_matrix_entries(self):
        g1 = labelled_path([1, 3])
        g2 = labelled_path([2])
        matrix = bp_cost_matrix(g1, g2, self.cost_model)
        self.assertEqual(matrix.shape, (3, 3))
        # substitution plus deletion of the one incident edge
        self.assertAlmostEqual(matrix[0, 0], 1.0 + 33.3)
        self.assertAlmostEqual(matrix[0, 1], 33.3 + 33.3)
        self.assertAlmostEqual(matrix[2, 0], 33.3)
        self.assertEqual(matrix[0, 2], SENTINEL)
        self.assertEqual(matrix[2, 1], 0.0)

    def test_directed_stars_are_split(self):
        forward = labelled_path([1, 1], directed=True)
        backward = AttributedGraph.build(
            [("n0", {"label": 1}), ("n1", {"label": 1})], [("e0", "n1", "n0", {"label": 0})], directed=True
        )
        matrix = bp_cost_matrix(forward, backward, self.cost_model)
        # n0 has one out-edge in forward and one in-edge in backward
        self.assertAlmostEqual(matrix[0, 0], 2 * 33.3)


class TestHausdorff(unittest.TestCase):
    """Test cases for the Hausdorff edit distance."""

    def setUp(self):
        """Set up test fixtures."""
        self.cost_model = ilpiso_model()

    def test_is_a_lower_bound(self):
        for directed in (True, False):
            for g1, g2 in random_pairs(4, directed):
                self.assertLessEqual(
                    hausdorff_ged(g1, g2, self.cost_model), brute_force_ged(g1, g2, self.cost_model) + 1e-9
                )

    def test_against_empty_graph(self):
        single = AttributedGraph.build([("v", {"label": 1})], [], directed=False)
        self.assertAlmostEqual(hausdorff_ged(single, empty_graph(directed=False), self.cost_model), 33.3)
        self.assertAlmostEqual(hausdorff_ged(empty_graph(directed=False), single, self.cost_model), 33.3)

    def test_identical_graphs(self):
        graph = labelled_path([4, 8, 15])
        self.assertAlmostEqual(hausdorff_ged(graph, graph, self.cost_model), 0.0)

    def test_symmetric_costs_give_a_symmetric_bound(self):
        for directed in (True, False):
            for g1, g2 in random_sized_pairs(30, directed, low=1, high=6, seed=5, label_range=4):
                forward = hausdorff_ged(g1, g2, self.cost_model)
                backward = hausdorff_ged(g2, g1, self.cost_model)
                self.assertAlmostEqual(forward, backward, places=9, msg=f"{g1.graph_id}/{g2.graph_id}")


class TestTreeSearch(unittest.TestCase):
    """Test cases for A* and beam search."""

    def setUp(self):
        """Set up test fixtures."""
        self.cost_model = ilpiso_model()

    def test_astar_is_exact(self):
        for directed in (True, False):
            for g1, g2 in random_pairs(4, directed):
                result = astar_ged(g1, g2, self.cost_model)
                self.assertEqual(result.status, SolveStatus.OPTIMAL)
                self.assertAlmostEqual(result.cost, brute_force_ged(g1, g2, self.cost_model), places=9)
                self.assertEqual(result.path.violations(g1, g2), [])
                self.assertGreater(result.expanded, 0)

    def test_astar_memory_limit_returns_a_path(self):
        g1, g2 = random_pair(6, 4, 4)
        result = astar_ged(g1, g2, self.cost_model, memory_limit=1)
        self.assertEqual(result.status, SolveStatus.FEASIBLE_MEMORY_LIMIT)
        self.assertEqual(result.path.violations(g1, g2), [])
        self.assertGreaterEqual(result.cost, brute_force_ged(g1, g2, self.cost_model) - 1e-9)

    def test_beam_is_an_upper_bound(self):
        for g1, g2 in random_pairs(4, directed=True):
            exact = brute_force_ged(g1, g2, self.cost_model)
            for q in (1, 2, 5):
                cost, path = beam_search(g1, g2, self.cost_model, q)
                self.assertGreaterEqual(cost, exact - 1e-9)
                self.assertAlmostEqual(path.total_cost, cost)

    def test_wide_beam_is_exhaustive(self):
        for g1, g2 in random_pairs(4):
            cost, _ = beam_search(g1, g2, self.cost_model, 1000)
            self.assertAlmostEqual(cost, brute_force_ged(g1, g2, self.cost_model), places=9)

    def test_widening_the_beam_never_beats_the_exhaustive_beam(self):
        # 1000 covers every frontier of graphs with at most 4 vertices
        for directed in (True, False):
            for g1, g2 in random_sized_pairs(15, directed, low=2, high=4, seed=11, label_range=4):
                exact = brute_force_ged(g1, g2, self.cost_model)
                widest, _ = beam_search(g1, g2, self.cost_model, 1000)
                self.assertAlmostEqual(widest, exact, places=9)
                for q in (1, 2, 5, 10, 100):
                    cost, path = beam_search(g1, g2, self.cost_model, q)
                    self.assertGreaterEqual(cost, widest - 1e-9, msg=f"q={q}")
                    self.assertAlmostEqual(path.total_cost, cost)
                    self.assertEqual(path.violations(g1, g2), [])

    def test_beam_width_must_be_positive(self):
        g1, g2 = random_pair(1, 3, 3)
        with self.assertRaises(ValueError):
            beam_search(g1, g2, self.cost_model, 0)

    def test_empty_source_graph(self):
        _, g2 = random_pair(2, 3, 3)
        source = empty_graph(directed=False)
        cost, path = beam_search(source, g2, self.cost_model, 2)
        self.assertAlmostEqual(cost, 33.3 * (g2.num_vertices + g2.num_edges))
        self.assertAlmostEqual(astar_ged(source, g2, self.cost_model).cost, cost)


if __name__ == '__main__':
    unittest.main()
