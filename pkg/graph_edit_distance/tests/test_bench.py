"""Tests for distance matrices, metrics and the benchmark runner."""

import json
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

from graph_edit_distance.bench.matrix import DistanceMatrix, pairwise_matrix
from graph_edit_distance.bench.metrics import deviation, reference_matrix, scores
from graph_edit_distance.bench.runner import BenchmarkConfig, run_benchmark
from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.data.ingester import save_graph
from graph_edit_distance.data.synthetic import generate_random_dataset
from graph_edit_distance.methods.base import MethodOptions, MethodRole
from graph_edit_distance.methods.registry import MethodRegistry
from graph_edit_distance.tests.fixtures import ilpiso_model


def _matrix(name, role, values):
    values = np.asarray(values, dtype=float)
    size = values.shape[0]
    return DistanceMatrix(
        name, role, tuple(f"g{i}" for i in range(size)), values,
        np.full(values.shape, "optimal", dtype=object), np.zeros(values.shape),
    )


class TestMetrics(unittest.TestCase):
    """Test cases for reference matrices, deviations and scores."""

    def test_reference_ignores_lower_bounds(self):
        matrices = {
            "exact": _matrix("exact", MethodRole.EXACT, [[0, 5], [5, 0]]),
            "upper": _matrix("upper", MethodRole.UPPER_BOUND, [[0, 4], [6, 0]]),
            "lower": _matrix("lower", MethodRole.LOWER_BOUND, [[0, 1], [1, 0]]),
        }
        np.testing.assert_allclose(reference_matrix(matrices), [[0, 4], [5, 0]])

    def test_reference_needs_a_distance(self):
        with self.assertRaises(BenchmarkError):
            reference_matrix([_matrix("lower", MethodRole.LOWER_BOUND, [[0.0]])])

    def test_deviation_excludes_zero_reference(self):
        result = deviation(np.array([[0.0, 2.0], [3.0, 4.0]]), np.array([[0.0, 0.0], [2.0, 4.0]]))
        self.assertAlmostEqual(result.mean, 0.5 / 3)
        self.assertEqual(result.excluded, 1)
        self.assertTrue(np.isnan(result.values[0, 1]))

    def test_deviation_with_epsilon(self):
        result = deviation(np.array([[0.0, 2.0], [3.0, 4.0]]), np.array([[0.0, 0.0], [2.0, 4.0]]), 0.5)
        self.assertAlmostEqual(result.values[0, 1], 4.0)
        self.assertAlmostEqual(result.mean, 4.5 / 4)
        self.assertEqual(result.excluded, 0)

    def test_deviation_shape_mismatch(self):
        with self.assertRaises(BenchmarkError):
            deviation(np.zeros((2, 2)), np.zeros((3, 3)))

    def test_scores_divide_by_the_largest_mean(self):
        table = scores({3: {"a": 1.0, "b": 2.0, "c": 4.0}}, {3: {"a": 4.0, "b": 2.0, "c": 1.0}})
        self.assertEqual(list(table["method"]), ["a", "b", "c"])
        np.testing.assert_allclose(table["deviation_score"], [0.25, 0.5, 1.0])
        np.testing.assert_allclose(table["speed_score"], [1.0, 0.5, 0.25])

    def test_degenerate_subset_contributes_zero(self):
        table = scores(
            {3: {"a": 0.0, "b": 0.0}, 4: {"a": 1.0, "b": 2.0}},
            {3: {"a": 1.0, "b": 1.0}, 4: {"a": 1.0, "b": 1.0}},
        )
        np.testing.assert_allclose(table["deviation_score"], [0.25, 0.5])
        np.testing.assert_allclose(table["speed_score"], [1.0, 1.0])


class TestPairwiseMatrix(unittest.TestCase):
    """Test cases for pairwise distance matrices."""

    def setUp(self):
        """Set up test fixtures."""
        self.graphs = generate_random_dataset([4], 3, seed=2)
        self.registry = MethodRegistry()
        self.cost_model = ilpiso_model()

    def test_bp_matrix(self):
        matrix = pairwise_matrix(self.graphs, self.registry.get("bp"), self.cost_model)
        self.assertEqual(matrix.values.shape, (3, 3))
        self.assertTrue((matrix.values >= 0).all())
        self.assertFalse(matrix.flagged.any())
        frame = matrix.to_frame()
        self.assertEqual(list(frame.columns), ["i", "j", "g1", "g2", "distance", "status"])
        self.assertEqual(len(frame), 9)

    def test_workers_give_the_same_matrix(self):
        method = self.registry.get("hed")
        serial = pairwise_matrix(self.graphs, method, self.cost_model, workers=1)
        parallel = pairwise_matrix(self.graphs, method, self.cost_model, workers=2)
        np.testing.assert_allclose(serial.values, parallel.values)

    def test_node_limit_is_flagged(self):
        options = MethodOptions(solver={"max_nodes": 1}, seed_incumbent=False)
        graphs = generate_random_dataset([6], 2, edge_probability=0.5, seed=4)
        matrix = pairwise_matrix(graphs, self.registry.get("f2u"), self.cost_model, options)
        for i in range(2):
            for j in range(2):
                if matrix.flagged[i, j]:
                    self.assertIn(matrix.statuses[i, j], ("feasible_timeout", "no_solution_timeout"))

    def test_lp_time_limit_is_flagged(self):
        graphs = generate_random_dataset([5], 2, 0.5, seed=3)
        options = MethodOptions(time_limit=1e-9)
        matrix = pairwise_matrix(graphs, self.registry.get("f2lp"), self.cost_model, options)
        self.assertTrue((matrix.statuses == "no_solution_timeout").all())
        self.assertTrue(matrix.flagged.all())
        self.assertTrue(np.isfinite(matrix.values).all())
        exact = pairwise_matrix(graphs, self.registry.get("f2u"), self.cost_model)
        self.assertTrue((matrix.values <= exact.values + 1e-6).all())

    def test_inapplicable_method(self):
        with self.assertRaises(BenchmarkError):
            pairwise_matrix(self.graphs, self.registry.get("f2"), self.cost_model)


class TestBenchmarkRunner(unittest.TestCase):
    """Test cases for configs and full benchmark runs."""

    def setUp(self):
        """Set up test fixtures."""
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name)
        self.dataset = self.root / "data"
        self.dataset.mkdir()
        for graph in generate_random_dataset([3, 4], 3, seed=6):
            save_graph(graph, str(self.dataset / f"{graph.graph_id}.gxl"))

    def tearDown(self):
        self.tmp.cleanup()

    def test_unknown_config_key(self):
        with self.assertRaises(BenchmarkError):
            BenchmarkConfig.from_dict({"dataset": "data", "colour": "red"})
        with self.assertRaises(BenchmarkError):
            BenchmarkConfig.from_dict({"methods": ["bp"]})
        with self.assertRaises(BenchmarkError):
            BenchmarkConfig.from_dict({"dataset": "data", "workers": 0})

    def test_load_resolves_relative_paths(self):
        path = self.root / "bench.json"
        path.write_text(json.dumps({"dataset": "data", "cost": "ilpiso", "methods": ["bp"]}), encoding="utf-8")
        config = BenchmarkConfig.load(path)
        self.assertEqual(Path(config.dataset), self.dataset)
        self.assertEqual(config.method_options().time_limit, 10.0)

    def test_run_writes_artifacts(self):
        config = BenchmarkConfig(
            dataset=str(self.dataset),
            cost="ilpiso",
            methods=["f2u", "f2lp", "bp", "hed"],
            time_limit=60.0,
        )
        out = self.root / "out"
        report = run_benchmark(config, out)

        self.assertEqual(list(report.matrices), [3, 4])
        exact = report.deviations[report.deviations["method"] == "f2u"]
        np.testing.assert_allclose(exact["mean_deviation"], 0.0, atol=1e-5)
        bp = report.deviations[report.deviations["method"] == "bp"]
        self.assertTrue((bp["mean_deviation"] >= 0).all())
        self.assertEqual(int(report.flagged_cells()["flagged_cells"].sum()), 0)

        for name in ("distances_3_f2u.csv", "times_4_hed.csv", "deviations.csv", "scores.csv",
                     "report.txt", "manifest.json"):
            self.assertTrue((out / name).exists(), msg=name)
        frame = pd.read_csv(out / "scores.csv")
        self.assertEqual(list(frame["method"]), ["f2u", "f2lp", "bp", "hed"])
        manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
        self.assertEqual(sorted(manifest["subsets"]), ["3", "4"])
        self.assertIn("numpy", manifest["versions"])
        self.assertIn("## Scores", (out / "report.txt").read_text(encoding="utf-8"))

    def test_lp_time_limit_does_not_stop_the_run(self):
        config = BenchmarkConfig(
            dataset=str(self.dataset),
            cost="ilpiso",
            methods=["bp", "f2lp"],
            time_limit=1e-9,
            subset_sizes=[4],
        )
        report = run_benchmark(config, self.root / "out")
        flagged = report.flagged_cells()
        counts = dict(zip(flagged["method"], flagged["flagged_cells"]))
        self.assertEqual(int(counts["f2lp"]), 9)
        self.assertEqual(int(counts.get("bp", 0)), 0)
        frame = pd.read_csv(self.root / "out" / "distances_4_f2lp.csv")
        self.assertEqual(set(frame["status"]), {"no_solution_timeout"})

    def test_repeated_runs_write_identical_tables(self):
        config = BenchmarkConfig(
            dataset=str(self.dataset),
            cost="ilpiso",
            methods=["f2u", "f2lp", "bp", "beam", "hed"],
            time_limit=60.0,
        )
        first, second = self.root / "first", self.root / "second"
        first_report = run_benchmark(config, first)
        second_report = run_benchmark(config, second)

        names = sorted(path.name for path in first.glob("distances_*.csv"))
        self.assertEqual(len(names), 10)
        self.assertEqual(names, sorted(path.name for path in second.glob("distances_*.csv")))
        for name in names + ["manifest.json"]:
            self.assertEqual((first / name).read_bytes(), (second / name).read_bytes(), msg=name)
        columns = ["subset", "method", "mean_deviation", "excluded_cells"]
        pd.testing.assert_frame_equal(first_report.deviations[columns], second_report.deviations[columns])
        pd.testing.assert_series_equal(first_report.scores["deviation_score"], second_report.scores["deviation_score"])

    def test_missing_dataset(self):
        config = BenchmarkConfig(dataset=str(self.root / "missing"), cost="ilpiso", methods=["bp"])
        with self.assertRaises(BenchmarkError):
            run_benchmark(config)


if __name__ == '__main__':
    unittest.main()
