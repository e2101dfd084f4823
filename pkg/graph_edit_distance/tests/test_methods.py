"""Tests for distance methods, the method registry and the engine."""

import tempfile
import unittest
from pathlib import Path

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.engine import EditDistanceEngine
from graph_edit_distance.core.exceptions import BenchmarkError, GraphValidationError
from graph_edit_distance.costs.factory import CostModelFactory, make_cost_model
from graph_edit_distance.data.ingester import save_graph
from graph_edit_distance.methods.base import GedMethod, MethodOptions, MethodOutcome, MethodRole
from graph_edit_distance.methods.registry import MethodRegistry
from graph_edit_distance.tests.fixtures import ilpiso_model, random_pair
from graph_edit_distance.tests.oracles import brute_force_ged


class ConstantMethod(GedMethod):
    """A method reporting a fixed distance."""

    @property
    def name(self) -> str:
        return "constant"

    @property
    def description(self) -> str:
        return "Always 1"

    @property
    def role(self) -> MethodRole:
        return MethodRole.UPPER_BOUND

    def execute(self, g1, g2, cost_model, options):
        return MethodOutcome(distance=1.0, status=SolveStatus.HEURISTIC)


class TestMethodRegistry(unittest.TestCase):
    """Test cases for method registration and lookup."""

    def setUp(self):
        """Set up test fixtures."""
        self.registry = MethodRegistry()

    def test_default_methods(self):
        self.assertEqual(
            set(self.registry.names()),
            {"f1", "f2", "f2_alt", "f2u", "f1lp", "f2lp", "astar", "beam", "bp", "hed"},
        )

    def test_unknown_method(self):
        with self.assertRaises(BenchmarkError):
            self.registry.get("gurobi")

    def test_register_rejects_non_methods(self):
        with self.assertRaises(TypeError):
            self.registry.register(object())

    def test_register_custom_method(self):
        self.registry.register(ConstantMethod())
        self.assertIn("constant", self.registry.names())
        g1, g2 = random_pair(1, 3, 3)
        self.assertEqual(self.registry.get("constant").compute(g1, g2, ilpiso_model()).distance, 1.0)

    def test_applicability_follows_directedness(self):
        undirected = random_pair(1, 3, 3, directed=False)
        directed = random_pair(1, 3, 3, directed=True)
        names_u = {m.name for m in self.registry.get_applicable(*undirected)}
        names_d = {m.name for m in self.registry.get_applicable(*directed)}
        self.assertIn("f2u", names_u)
        self.assertNotIn("f2", names_u)
        self.assertIn("f2_alt", names_d)
        self.assertNotIn("f2u", names_d)
        mixed = (directed[0], undirected[1])
        self.assertEqual(self.registry.get_applicable(*mixed), [])

    def test_inapplicable_pair_raises(self):
        g1, g2 = random_pair(1, 3, 3, directed=False)
        with self.assertRaises(BenchmarkError):
            self.registry.get("f2").compute(g1, g2, ilpiso_model())

    def test_roles(self):
        lower = {m.name for m in self.registry.with_role(MethodRole.LOWER_BOUND)}
        self.assertEqual(lower, {"f1lp", "f2lp", "hed"})
        exact = {m.name for m in self.registry.with_role(MethodRole.EXACT)}
        self.assertEqual(exact, {"f1", "f2", "f2_alt", "f2u", "astar"})


class TestMethodOutcomes(unittest.TestCase):
    """Test cases for running every method on one pair."""

    def setUp(self):
        """Set up test fixtures."""
        self.cost_model = ilpiso_model()
        self.registry = MethodRegistry()
        self.g1, self.g2 = random_pair(7, 4, 3, directed=False)
        self.exact = brute_force_ged(self.g1, self.g2, self.cost_model)

    def test_roles_match_values(self):
        options = MethodOptions(time_limit=30.0, beam_width=2)
        for method in self.registry.get_applicable(self.g1, self.g2):
            outcome = method.compute(self.g1, self.g2, self.cost_model, options)
            self.assertGreaterEqual(outcome.seconds, 0.0)
            if method.role is MethodRole.EXACT:
                self.assertAlmostEqual(outcome.distance, self.exact, places=6, msg=method.name)
                self.assertEqual(outcome.status, SolveStatus.OPTIMAL, msg=method.name)
            elif method.role is MethodRole.LOWER_BOUND:
                self.assertLessEqual(outcome.distance, self.exact + 1e-6, msg=method.name)
            else:
                self.assertGreaterEqual(outcome.distance, self.exact - 1e-6, msg=method.name)
                self.assertEqual(outcome.status, SolveStatus.HEURISTIC)

    def test_outcome_to_dict(self):
        outcome = self.registry.get("f2u").compute(self.g1, self.g2, self.cost_model)
        data = outcome.to_dict()
        self.assertEqual(data["status"], "optimal")
        self.assertIsNotNone(data["path"])
        self.assertIn("vertex_substitutions", data["path"])

    def test_solver_options_pass_through(self):
        options = MethodOptions(solver={"branching": "first_fractional"})
        self.assertEqual(options.solve_options().branching, "first_fractional")
        self.assertEqual(options.solve_options().time_limit, options.time_limit)


class TestEditDistanceEngine(unittest.TestCase):
    """Test cases for the engine orchestrator."""

    def setUp(self):
        """Set up test fixtures."""
        self.engine = EditDistanceEngine(make_cost_model(CostModelFactory.defaults("ilpiso")))
        self.g1, self.g2 = random_pair(11, 3, 4)

    def test_compare_and_report(self):
        outcomes = self.engine.compare(self.g1, self.g2, ["bp", "f2u", "hed"])
        self.assertEqual(list(outcomes), ["bp", "f2u", "hed"])
        self.assertLessEqual(outcomes["f2u"].distance, outcomes["bp"].distance + 1e-9)
        report = self.engine.generate_report(self.g1, self.g2, outcomes)
        self.assertIn("=" * 60, report)
        self.assertIn("A11 VS B11", report)
        self.assertIn("f2u", report)

    def test_unknown_method_propagates(self):
        with self.assertRaises(BenchmarkError):
            self.engine.compare(self.g1, self.g2, ["nope"])

    def test_load_validates_attributes(self):
        engine = EditDistanceEngine(make_cost_model(CostModelFactory.defaults("muta")))
        with tempfile.TemporaryDirectory() as tmp:
            path = str(Path(tmp) / "g.gxl")
            save_graph(self.g1, path)
            with self.assertRaises(GraphValidationError):
                engine.load(path)
            self.assertEqual(self.engine.load(path).graph_id, self.g1.graph_id)

    def test_compare_and_report_from_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            first, second = str(Path(tmp) / "a.gxl"), str(Path(tmp) / "b.txt")
            save_graph(self.g1, first)
            save_graph(self.g2, second)
            report = self.engine.compare_and_report(first, second, ["bp"])
        self.assertIn("bp", report)
        self.assertIn("heuristic", report)


if __name__ == '__main__':
    unittest.main()
