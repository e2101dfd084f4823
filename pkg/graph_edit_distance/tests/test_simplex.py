"""Tests for the bounded revised simplex."""

import unittest

import numpy as np
import scipy.sparse as sp
from scipy.optimize import linprog

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.exceptions import SolverError
from graph_edit_distance.formulations.builders import build_model
from graph_edit_distance.formulations.model import LESS_EQUAL, ModelBuilder, relax
from graph_edit_distance.solver.options import SolveOptions
from graph_edit_distance.solver.simplex import BoundedSimplex, LpStatus, solve_lp, trivial_bound
from graph_edit_distance.tests.fixtures import ilpiso_model, random_pairs


def _reference(c, a_ub, b_ub, a_eq, b_eq, upper=1.0):
    result = linprog(
        c,
        A_ub=a_ub if a_ub.shape[0] else None,
        b_ub=b_ub if a_ub.shape[0] else None,
        A_eq=a_eq if a_eq.shape[0] else None,
        b_eq=b_eq if a_eq.shape[0] else None,
        bounds=[(0.0, upper)] * len(c),
        method="highs",
    )
    return result


def _random_lp(rng, n, m_ub, m_eq):
    """A feasible LP over the unit box, built around a random interior point."""
    x0 = rng.uniform(0.0, 1.0, n)
    c = rng.uniform(-5.0, 5.0, n)
    a_ub = rng.uniform(-1.0, 2.0, (m_ub, n))
    b_ub = a_ub @ x0 + rng.uniform(0.0, 0.5, m_ub)
    a_eq = rng.uniform(-1.0, 1.0, (m_eq, n))
    b_eq = a_eq @ x0
    return c, a_ub, b_ub, a_eq, b_eq


class TestBoundedSimplex(unittest.TestCase):
    """Test cases comparing the simplex with scipy's HiGHS."""

    def test_random_feasible_lps(self):
        rng = np.random.default_rng(7)
        for trial in range(25):
            n, m_ub, m_eq = 4 + trial % 5, 1 + trial % 4, trial % 3
            c, a_ub, b_ub, a_eq, b_eq = _random_lp(rng, n, m_ub, m_eq)
            engine = BoundedSimplex(c, sp.csr_matrix(a_ub), b_ub, sp.csr_matrix(a_eq.reshape(m_eq, n)), b_eq)
            outcome = engine.solve(np.zeros(n), np.ones(n))
            reference = _reference(c, a_ub, b_ub, a_eq.reshape(m_eq, n), b_eq)
            self.assertEqual(outcome.status, LpStatus.OPTIMAL, msg=f"trial {trial}")
            self.assertAlmostEqual(outcome.objective, reference.fun, places=6, msg=f"trial {trial}")
            self.assertTrue(np.all(a_ub @ outcome.x <= b_ub + 1e-7))
            if m_eq:
                np.testing.assert_allclose(a_eq @ outcome.x, b_eq, atol=1e-7)

    def test_infeasible(self):
        c = np.array([1.0, 1.0])
        engine = BoundedSimplex(c, sp.csr_matrix([[-1.0, -1.0]]), np.array([-3.0]),
                                sp.csr_matrix((0, 2)), np.zeros(0))
        outcome = engine.solve(np.zeros(2), np.ones(2))
        self.assertEqual(outcome.status, LpStatus.INFEASIBLE)
        self.assertIsNone(outcome.x)

    def test_crossed_bounds_are_infeasible(self):
        engine = BoundedSimplex(np.ones(2), sp.csr_matrix([[1.0, 1.0]]), np.array([1.0]),
                                sp.csr_matrix((0, 2)), np.zeros(0))
        outcome = engine.solve(np.array([1.0, 0.0]), np.array([0.0, 1.0]))
        self.assertEqual(outcome.status, LpStatus.INFEASIBLE)

    def test_unbounded(self):
        engine = BoundedSimplex(np.array([-1.0, 0.0]), sp.csr_matrix([[0.0, 1.0]]), np.array([1.0]),
                                sp.csr_matrix((0, 2)), np.zeros(0))
        outcome = engine.solve(np.zeros(2), np.array([np.inf, 1.0]))
        self.assertEqual(outcome.status, LpStatus.UNBOUNDED)

    def test_no_rows(self):
        engine = BoundedSimplex(np.array([1.0, -2.0]), sp.csr_matrix((0, 2)), np.zeros(0),
                                sp.csr_matrix((0, 2)), np.zeros(0))
        outcome = engine.solve(np.zeros(2), np.ones(2))
        self.assertEqual(outcome.status, LpStatus.OPTIMAL)
        self.assertAlmostEqual(outcome.objective, -2.0)
        np.testing.assert_allclose(outcome.x, [0.0, 1.0])

    def test_warm_start_matches_cold_solve(self):
        rng = np.random.default_rng(11)
        c, a_ub, b_ub, a_eq, b_eq = _random_lp(rng, 8, 4, 1)
        args = (c, sp.csr_matrix(a_ub), b_ub, sp.csr_matrix(a_eq), b_eq)
        engine = BoundedSimplex(*args)
        first = engine.solve(np.zeros(8), np.ones(8))
        self.assertEqual(first.status, LpStatus.OPTIMAL)

        j = int(np.argmax(np.minimum(first.x, 1.0 - first.x)))
        for value in (0.0, 1.0):
            lower, upper = np.zeros(8), np.ones(8)
            lower[j] = upper[j] = value
            warm = engine.solve(lower, upper, basis=first.basis)
            cold = BoundedSimplex(*args).solve(lower, upper)
            self.assertEqual(warm.status, cold.status)
            if cold.status is LpStatus.OPTIMAL:
                self.assertAlmostEqual(warm.objective, cold.objective, places=6)
                self.assertAlmostEqual(warm.x[j], value)


class TestSolveLp(unittest.TestCase):
    """Test cases for solve_lp on graph edit distance relaxations."""

    def test_relaxations_match_highs(self):
        cost_model = ilpiso_model()
        for directed, names in ((True, ("f1", "f2", "f2_alt")), (False, ("f1", "f2u"))):
            for g1, g2 in random_pairs(3, directed):
                for name in names:
                    model = relax(build_model(name, g1, g2, cost_model))
                    result = solve_lp(model)
                    c, a_ub, b_ub, a_eq, b_eq = model.to_arrays()
                    reference = _reference(c, a_ub.toarray(), b_ub, a_eq.toarray(), b_eq)
                    self.assertEqual(result.status, SolveStatus.OPTIMAL)
                    self.assertAlmostEqual(result.objective, model.constant + reference.fun, places=5, msg=name)
                    self.assertEqual(result.objective, result.best_bound)
                    self.assertGreaterEqual(result.objective, trivial_bound(model) - 1e-9)

    def test_needs_relaxed_model(self):
        g1, g2 = random_pairs(1)[0]
        with self.assertRaises(SolverError):
            solve_lp(build_model("f2u", g1, g2, ilpiso_model()))

    def test_infeasible_model(self):
        builder = ModelBuilder()
        x = builder.add_variable("x", "x", 1.0)
        builder.add_constraint("impossible", [(x, -1.0)], LESS_EQUAL, -2.0)
        result = solve_lp(relax(builder.build()))
        self.assertEqual(result.status, SolveStatus.INFEASIBLE)
        self.assertIsNone(result.values)

    def test_options_validation(self):
        with self.assertRaises(SolverError):
            SolveOptions(time_limit=0)
        with self.assertRaises(SolverError):
            SolveOptions(branching="widest")


if __name__ == '__main__':
    unittest.main()
