"""Bounded-variable revised simplex with warm-started dual iterations."""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
import scipy.sparse as sp

from graph_edit_distance.core.edit_path import SolveStatus
from graph_edit_distance.core.exceptions import SolverError
from graph_edit_distance.formulations.model import BlpModel
from graph_edit_distance.solver.options import SolveOptions, SolveResult, SolveStats

logger = logging.getLogger(__name__)

BASIC, AT_LOWER, AT_UPPER = 0, 1, 2
_PIVOT_TOL = 1e-9


class LpStatus(Enum):
    """Termination of a single LP solve."""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    TIME_LIMIT = "time_limit"


@dataclass(frozen=True)
class LpBasis:
    """Basis snapshot: basic column per row and the status of every column."""
    basis: np.ndarray
    status: np.ndarray


@dataclass
class LpOutcome:
    """
    Result of one BoundedSimplex.solve call.

    Attributes:
        status: Termination status
        objective: c.x over the structural variables (no constant term)
        x: Structural values, None unless optimal
        basis: Final basis, None unless optimal
        iterations: Pivots and bound flips of this call
        warm: True if the dual warm start produced the result
    """
    status: LpStatus
    objective: float
    x: Optional[np.ndarray]
    basis: Optional[LpBasis]
    iterations: int
    warm: bool = False


class BoundedSimplex:
    """
    Revised simplex for  min c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  l <= x <= u.

    Upper bounds are handled in the ratio test (bound flips), not as rows.
    Columns are laid out as [structural | slack per <= row | artificial per
    row]. The basis inverse is dense and kept up to date with rank-one
    updates, with a full refactorization every refactor_every pivots.

    Cold solves run a two-phase primal simplex. Re-solves after bound changes
    start from a previous basis with the dual simplex and fall back to a
    cold solve when that basis cannot be made dual feasible.
    """

    def __init__(
        self,
        c: np.ndarray,
        a_ub: sp.spmatrix,
        b_ub: np.ndarray,
        a_eq: sp.spmatrix,
        b_eq: np.ndarray,
        tol: float = 1e-9,
        refactor_every: int = 50,
        stall_limit: int = 50,
    ):
        """
        Initialize the simplex.

        Args:
            c: Structural cost vector
            a_ub: Inequality rows (sparse)
            b_ub: Inequality right-hand sides
            a_eq: Equality rows (sparse)
            b_eq: Equality right-hand sides
            tol: Primal and dual feasibility tolerance
            refactor_every: Pivots between basis refactorizations
            stall_limit: Consecutive degenerate pivots before Bland's rule engages
        """
        self.n = len(c)
        self.m_ub = a_ub.shape[0]
        self.m = self.m_ub + a_eq.shape[0]
        self.tol = tol
        self.refactor_every = refactor_every
        self.stall_limit = stall_limit

        upper_rows = sp.coo_matrix(a_ub)
        equal_rows = sp.coo_matrix(a_eq)
        rows = np.concatenate([upper_rows.row, equal_rows.row + self.m_ub, np.arange(self.m_ub)])
        cols = np.concatenate([upper_rows.col, equal_rows.col, self.n + np.arange(self.m_ub)])
        data = np.concatenate([upper_rows.data, equal_rows.data, np.ones(self.m_ub)])
        self._n_cols = self.n + self.m_ub
        self._a = sp.csc_matrix((data, (rows, cols)), shape=(self.m, self._n_cols))
        self._at = self._a.T.tocsr()
        self._b = np.concatenate([np.asarray(b_ub, dtype=float), np.asarray(b_eq, dtype=float)])

        self._total = self._n_cols + self.m
        self._c = np.zeros(self._total)
        self._c[:self.n] = c
        self._art_sign = np.ones(self.m)
        self._lower = np.zeros(self._total)
        self._upper = np.full(self._total, np.inf)
        self._upper[self._n_cols:] = 0.0

        self._basis = np.arange(self._n_cols, self._total)
        self._status = np.full(self._total, AT_LOWER)
        self._x = np.zeros(self._total)
        self._binv = np.eye(self.m)
        self._pivots_since_refactor = 0
        self._iterations = 0
        self._iteration_cap = 0

    @classmethod
    def from_model(cls, model: BlpModel, tol: float = 1e-9) -> "BoundedSimplex":
        c, a_ub, b_ub, a_eq, b_eq = model.to_arrays()
        return cls(c, a_ub, b_ub, a_eq, b_eq, tol=tol)

    # --- public API ----------------------------------------------------------

    def solve(
        self,
        lower: np.ndarray,
        upper: np.ndarray,
        basis: Optional[LpBasis] = None,
        deadline: Optional[float] = None,
    ) -> LpOutcome:
        """
        Solve with the given structural bounds.

        Args:
            lower: Structural lower bounds
            upper: Structural upper bounds
            basis: Optional starting basis of an earlier solve
            deadline: time.monotonic() value after which the solve stops

        Returns:
            LpOutcome
        """
        start = self._iterations
        self._iteration_cap = start + 50 * (self.m + self.n) + 1000
        self._lower[:self.n] = lower
        self._upper[:self.n] = upper
        if np.any(self._lower[:self.n] > self._upper[:self.n] + self.tol):
            return LpOutcome(LpStatus.INFEASIBLE, np.inf, None, None, 0)
        if self.m == 0:
            return self._solve_unconstrained()

        if basis is not None:
            try:
                if self._warm_start(basis):
                    status = self._dual(deadline)
                    if status is not None:
                        return self._outcome(status, start, warm=True)
                else:
                    logger.debug("event=warm_start_rejected reason=dual_infeasible")
            except SolverError as exc:
                logger.debug("event=warm_start_failed reason=%s", exc)

        status = self._two_phase(deadline)
        return self._outcome(status, start)

    # --- linear algebra helpers ---------------------------------------------

    def _column(self, j: int) -> np.ndarray:
        col = np.zeros(self.m)
        if j < self._n_cols:
            start, end = self._a.indptr[j], self._a.indptr[j + 1]
            col[self._a.indices[start:end]] = self._a.data[start:end]
        else:
            row = j - self._n_cols
            col[row] = self._art_sign[row]
        return col

    def _price(self, multipliers: np.ndarray) -> np.ndarray:
        """Row vector multipliers^T [A | S | D] over all columns."""
        return np.concatenate([self._at @ multipliers, self._art_sign * multipliers])

    def _refactor(self) -> None:
        matrix = np.column_stack([self._column(j) for j in self._basis])
        try:
            self._binv = np.linalg.inv(matrix)
        except np.linalg.LinAlgError:
            raise SolverError("singular basis matrix")
        self._pivots_since_refactor = 0

    def _update_inverse(self, row: int, alpha: np.ndarray) -> None:
        pivot = alpha[row]
        pivot_row = self._binv[row] / pivot
        self._binv -= np.outer(alpha, pivot_row)
        self._binv[row] = pivot_row
        self._pivots_since_refactor += 1
        if self._pivots_since_refactor >= self.refactor_every:
            self._refactor()

    def _compute_basic_values(self) -> np.ndarray:
        nonbasic = self._x.copy()
        nonbasic[self._basis] = 0.0
        residual = self._b - self._a @ nonbasic[:self._n_cols] - self._art_sign * nonbasic[self._n_cols:]
        values = self._binv @ residual
        self._x[self._basis] = values
        return values

    def _reduced_costs(self, cost: np.ndarray) -> np.ndarray:
        multipliers = cost[self._basis] @ self._binv
        return cost - self._price(multipliers)

    def _tick(self, deadline: Optional[float]) -> bool:
        """Count an iteration; True when the deadline has passed."""
        if self._iterations >= self._iteration_cap:
            raise SolverError("simplex iteration limit reached")
        return deadline is not None and time.monotonic() > deadline

    # --- primal simplex -------------------------------------------------------

    def _primal(self, cost: np.ndarray, deadline: Optional[float]) -> LpStatus:
        bland = False
        degenerate = 0
        while True:
            if self._tick(deadline):
                return LpStatus.TIME_LIMIT
            basic_values = self._compute_basic_values()
            d = self._reduced_costs(cost)
            movable = (self._status != BASIC) & (self._upper > self._lower)
            improving = movable & (
                ((self._status == AT_LOWER) & (d < -self.tol)) | ((self._status == AT_UPPER) & (d > self.tol))
            )
            candidates = np.flatnonzero(improving)
            if candidates.size == 0:
                return LpStatus.OPTIMAL
            q = candidates[0] if bland else candidates[np.argmax(np.abs(d[candidates]))]

            direction = 1.0 if self._status[q] == AT_LOWER else -1.0
            alpha = self._binv @ self._column(q)
            rate = -direction * alpha
            lower_b = self._lower[self._basis]
            upper_b = self._upper[self._basis]
            ratios = np.full(self.m, np.inf)
            falling = rate < -_PIVOT_TOL
            rising = rate > _PIVOT_TOL
            ratios[falling] = (basic_values[falling] - lower_b[falling]) / -rate[falling]
            ratios[rising] = (upper_b[rising] - basic_values[rising]) / rate[rising]
            np.maximum(ratios, 0.0, out=ratios)

            step = self._upper[q] - self._lower[q]
            row = -1
            best = ratios.min()
            if best < step:
                ties = np.flatnonzero(ratios <= best + 1e-12)
                row = ties[np.argmin(self._basis[ties])] if bland else ties[np.argmax(np.abs(alpha[ties]))]
                step = best
            if np.isinf(step):
                return LpStatus.UNBOUNDED

            self._iterations += 1
            if step <= self.tol:
                degenerate += 1
                if degenerate > self.stall_limit:
                    bland = True
            else:
                degenerate = 0
                bland = False

            if row < 0:
                self._status[q] = AT_UPPER if direction > 0 else AT_LOWER
                self._x[q] = self._upper[q] if direction > 0 else self._lower[q]
            else:
                leaving = self._basis[row]
                to_upper = rate[row] > 0
                self._status[leaving] = AT_UPPER if to_upper else AT_LOWER
                self._x[leaving] = self._upper[leaving] if to_upper else self._lower[leaving]
                self._basis[row] = q
                self._status[q] = BASIC
                self._update_inverse(row, alpha)

    def _two_phase(self, deadline: Optional[float]) -> LpStatus:
        self._cold_start()
        phase_one = np.zeros(self._total)
        phase_one[self._n_cols:] = 1.0
        status = self._primal(phase_one, deadline)
        if status is LpStatus.TIME_LIMIT:
            return status
        self._compute_basic_values()
        infeasibility = float(self._x[self._n_cols:].sum())
        scale = max(1.0, float(np.abs(self._b).max(initial=0.0)))
        if infeasibility > max(1e-7, 1e3 * self.tol) * scale:
            return LpStatus.INFEASIBLE
        self._upper[self._n_cols:] = 0.0
        return self._primal(self._c, deadline)

    def _cold_start(self) -> None:
        n_cols = self._n_cols
        self._status[:] = AT_LOWER
        self._x[:] = 0.0
        self._x[:self.n] = self._lower[:self.n]
        self._upper[n_cols:] = 0.0
        residual = self._b - self._a @ self._x[:n_cols]
        for row in range(self.m):
            if row < self.m_ub and residual[row] >= 0:
                column = self.n + row
                self._art_sign[row] = 1.0
            else:
                column = n_cols + row
                self._art_sign[row] = 1.0 if residual[row] >= 0 else -1.0
                self._upper[column] = np.inf
            self._basis[row] = column
            self._status[column] = BASIC
            self._x[column] = abs(residual[row])
        self._binv = np.diag(np.where(self._basis >= n_cols, self._art_sign, 1.0))
        self._pivots_since_refactor = 0

    # --- dual simplex ---------------------------------------------------------

    def _warm_start(self, start: LpBasis) -> bool:
        """Load a basis and move nonbasic columns to their dual-feasible bound."""
        if start.basis.shape != (self.m,) or start.status.shape != (self._total,):
            raise SolverError("warm start basis has the wrong shape")
        self._basis = start.basis.copy()
        self._status = start.status.copy()
        self._upper[self._n_cols:] = 0.0
        self._refactor()
        d = self._reduced_costs(self._c)
        nonbasic = self._status != BASIC
        boxed = nonbasic & np.isfinite(self._upper)
        self._status[boxed & (d < -self.tol)] = AT_UPPER
        self._status[boxed & (d > self.tol)] = AT_LOWER
        self._status[nonbasic & ~np.isfinite(self._upper)] = AT_LOWER
        at_upper = nonbasic & (self._status == AT_UPPER)
        self._x[nonbasic] = np.where(at_upper[nonbasic], self._upper[nonbasic], self._lower[nonbasic])
        unboxed_bad = nonbasic & ~np.isfinite(self._upper) & (d < -self.tol)
        return not np.any(unboxed_bad)

    def _dual(self, deadline: Optional[float]) -> Optional[LpStatus]:
        """Dual simplex from a dual feasible basis; None when it gives up."""
        cap = self._iterations + 10 * (self.m + self.n) + 100
        while True:
            if self._iterations >= cap:
                logger.debug("event=dual_iteration_cap iterations=%d", self._iterations)
                return None
            if self._tick(deadline):
                return LpStatus.TIME_LIMIT
            basic_values = self._compute_basic_values()
            below = self._lower[self._basis] - basic_values
            above = basic_values - self._upper[self._basis]
            infeasibility = np.maximum(below, above)
            row = int(np.argmax(infeasibility))
            if infeasibility[row] <= self.tol * max(1.0, abs(basic_values[row])):
                return LpStatus.OPTIMAL
            increase = below[row] > above[row]

            alpha_row = self._price(self._binv[row])
            d = self._reduced_costs(self._c)
            movable = (self._status != BASIC) & (self._upper > self._lower)
            at_lower = self._status == AT_LOWER
            at_upper = self._status == AT_UPPER
            if increase:
                eligible = movable & ((at_lower & (alpha_row < -_PIVOT_TOL)) | (at_upper & (alpha_row > _PIVOT_TOL)))
            else:
                eligible = movable & ((at_lower & (alpha_row > _PIVOT_TOL)) | (at_upper & (alpha_row < -_PIVOT_TOL)))
            candidates = np.flatnonzero(eligible)
            if candidates.size == 0:
                return LpStatus.INFEASIBLE
            ratios = np.abs(d[candidates]) / np.abs(alpha_row[candidates])
            best = ratios.min()
            ties = candidates[ratios <= best + 1e-12]
            q = ties[np.argmax(np.abs(alpha_row[ties]))]

            alpha = self._binv @ self._column(q)
            if abs(alpha[row]) < _PIVOT_TOL:
                raise SolverError("unstable dual pivot")
            self._iterations += 1
            leaving = self._basis[row]
            self._status[leaving] = AT_LOWER if increase else AT_UPPER
            self._x[leaving] = self._lower[leaving] if increase else self._upper[leaving]
            self._basis[row] = q
            self._status[q] = BASIC
            self._update_inverse(row, alpha)

    # --- results ----------------------------------------------------------------

    def _solve_unconstrained(self) -> LpOutcome:
        c = self._c[:self.n]
        x = np.where(c < 0, self._upper[:self.n], self._lower[:self.n])
        if np.any(np.isinf(x)):
            return LpOutcome(LpStatus.UNBOUNDED, -np.inf, None, None, 0)
        basis = LpBasis(np.arange(0), np.where(c < 0, AT_UPPER, AT_LOWER))
        return LpOutcome(LpStatus.OPTIMAL, float(c @ x), x, basis, 0)

    def _outcome(self, status: LpStatus, start: int, warm: bool = False) -> LpOutcome:
        iterations = self._iterations - start
        if status is not LpStatus.OPTIMAL:
            objective = np.inf if status is LpStatus.INFEASIBLE else -np.inf
            return LpOutcome(status, objective, None, None, iterations, warm)
        self._compute_basic_values()
        x = np.clip(self._x[:self.n], self._lower[:self.n], self._upper[:self.n])
        basis = LpBasis(self._basis.copy(), self._status.copy())
        return LpOutcome(status, float(self._c[:self.n] @ x), x, basis, iterations, warm)


def trivial_bound(model: BlpModel) -> float:
    """Lower bound of a model with unit-interval variables, ignoring every row."""
    return model.constant + float(np.minimum(model.cost_vector, 0.0).sum())


def solve_lp(model: BlpModel, options: Optional[SolveOptions] = None) -> SolveResult:
    """
    Solve a relaxed model with the bounded revised simplex.

    Args:
        model: Model whose variables all have the unit-interval domain
        options: Solver options (time_limit and lp_tol are used)

    Returns:
        SolveResult; status optimal with objective = best_bound on success

    Raises:
        SolverError: If the model still has binary variables
    """
    options = options or SolveOptions()
    if not model.is_relaxed:
        raise SolverError("solve_lp expects a relaxed model; call relax() first")
    started = time.monotonic()
    engine = BoundedSimplex.from_model(model, tol=options.lp_tol)
    n = model.num_variables
    outcome = engine.solve(np.zeros(n), np.ones(n), deadline=started + options.time_limit)
    stats = SolveStats(nodes=0, lp_iterations=outcome.iterations, wall_time=time.monotonic() - started)

    if outcome.status is LpStatus.OPTIMAL:
        objective = model.constant + outcome.objective
        return SolveResult(SolveStatus.OPTIMAL, objective, objective, outcome.x, stats)
    if outcome.status is LpStatus.INFEASIBLE:
        return SolveResult(SolveStatus.INFEASIBLE, np.inf, np.inf, None, stats)
    if outcome.status is LpStatus.UNBOUNDED:
        return SolveResult(SolveStatus.UNBOUNDED, -np.inf, -np.inf, None, stats)
    return SolveResult(SolveStatus.NO_SOLUTION_TIMEOUT, np.inf, trivial_bound(model), None, stats)
