"""Generic minimization BLP/LP model."""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from graph_edit_distance.core.exceptions import FormulationError


class Domain(Enum):
    """Variable domains."""
    BINARY = "binary"
    UNIT_INTERVAL = "unit_interval"


LESS_EQUAL = "<="
EQUAL = "="


@dataclass(frozen=True)
class Variable:
    """
    A model variable.

    Attributes:
        name: LP-safe variable name
        domain: Binary or unit interval
        group: Edit decision family ('x', 'y', 'u', 'v', 'e', 'f'), used for branching priority
    """
    name: str
    domain: Domain = Domain.BINARY
    group: str = "x"


@dataclass(frozen=True)
class Constraint:
    """A sparse linear row: sum(coef * var) <sense> rhs."""
    name: str
    terms: Tuple[Tuple[int, float], ...]
    sense: str
    rhs: float


@dataclass(frozen=True)
class BlpModel:
    """
    Minimize constant + sum(c_j x_j) subject to sparse linear rows.

    Attributes:
        variables: Ordered variables
        objective: Sparse (index, coefficient) list
        constant: Objective constant term
        constraints: Ordered constraint rows
        kind: Formulation name ('f1', 'f2', 'f2_alt', 'f2u' or 'generic')
        layout: Offset of each variable family in the variable vector
        shape: (|V1|, |V2|, |E1|, |E2|) of the graph pair the model encodes
    """
    variables: Tuple[Variable, ...]
    objective: Tuple[Tuple[int, float], ...]
    constant: float
    constraints: Tuple[Constraint, ...]
    kind: str = "generic"
    layout: Mapping[str, int] = field(default_factory=dict)
    shape: Tuple[int, int, int, int] = (0, 0, 0, 0)

    def __post_init__(self):
        n = len(self.variables)
        if not math.isfinite(self.constant):
            raise FormulationError("objective constant must be finite")
        for index, coef in self.objective:
            if not 0 <= index < n:
                raise FormulationError(f"objective references undeclared variable {index}")
            if not math.isfinite(coef):
                raise FormulationError(f"objective coefficient of variable {index} is not finite")
        for row in self.constraints:
            if row.sense not in (LESS_EQUAL, EQUAL):
                raise FormulationError(f"constraint {row.name} has unknown sense '{row.sense}'")
            for index, _ in row.terms:
                if not 0 <= index < n:
                    raise FormulationError(f"constraint {row.name} references undeclared variable {index}")

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    @property
    def is_relaxed(self) -> bool:
        return all(v.domain is Domain.UNIT_INTERVAL for v in self.variables)

    @cached_property
    def index_of(self) -> Dict[str, int]:
        return {v.name: index for index, v in enumerate(self.variables)}

    @cached_property
    def binary_mask(self) -> np.ndarray:
        return np.array([v.domain is Domain.BINARY for v in self.variables], dtype=bool)

    @cached_property
    def cost_vector(self) -> np.ndarray:
        c = np.zeros(self.num_variables)
        for index, coef in self.objective:
            c[index] += coef
        return c

    def to_arrays(self) -> Tuple[np.ndarray, sp.csr_matrix, np.ndarray, sp.csr_matrix, np.ndarray]:
        """
        Matrix form of the model.

        Returns:
            (c, A_ub, b_ub, A_eq, b_eq) with sparse CSR constraint matrices
        """
        n = self.num_variables
        blocks = {}
        for sense in (LESS_EQUAL, EQUAL):
            rows = [r for r in self.constraints if r.sense == sense]
            row_idx, col_idx, data = [], [], []
            for r, row in enumerate(rows):
                for index, coef in row.terms:
                    row_idx.append(r)
                    col_idx.append(index)
                    data.append(coef)
            matrix = sp.csr_matrix((data, (row_idx, col_idx)), shape=(len(rows), n))
            blocks[sense] = (matrix, np.array([row.rhs for row in rows], dtype=float))
        a_ub, b_ub = blocks[LESS_EQUAL]
        a_eq, b_eq = blocks[EQUAL]
        return self.cost_vector.copy(), a_ub, b_ub, a_eq, b_eq

    def evaluate(self, values: Sequence[float]) -> float:
        """Objective value of an assignment."""
        return self.constant + float(np.dot(self.cost_vector, np.asarray(values, dtype=float)))

    def violations(self, values: Sequence[float], tol: float = 1e-6) -> List[str]:
        """
        Constraint rows and bounds broken by an assignment by more than tol.
        """
        x = np.asarray(values, dtype=float)
        found = []
        if x.shape != (self.num_variables,):
            return [f"expected {self.num_variables} values, got {x.shape}"]
        for index in np.flatnonzero((x < -tol) | (x > 1.0 + tol)):
            found.append(f"{self.variables[index].name}={x[index]} outside [0, 1]")
        for row in self.constraints:
            lhs = sum(coef * x[index] for index, coef in row.terms)
            if row.sense == LESS_EQUAL and lhs > row.rhs + tol:
                found.append(f"{row.name}: {lhs} > {row.rhs}")
            elif row.sense == EQUAL and abs(lhs - row.rhs) > tol:
                found.append(f"{row.name}: {lhs} != {row.rhs}")
        return found


def relax(model: BlpModel) -> BlpModel:
    """
    Continuous relaxation: every domain becomes the unit interval.

    Objective and constraints are unchanged; relax is idempotent.
    """
    variables = tuple(replace(v, domain=Domain.UNIT_INTERVAL) for v in model.variables)
    return replace(model, variables=variables)


class ModelBuilder:
    """Incremental construction of a BlpModel with summed duplicate terms."""

    def __init__(self, kind: str = "generic"):
        self.kind = kind
        self._variables: List[Variable] = []
        self._objective: Dict[int, float] = {}
        self._constraints: List[Constraint] = []
        self.constant = 0.0
        self.layout: Dict[str, int] = {}

    @property
    def num_variables(self) -> int:
        return len(self._variables)

    def add_variable(self, name: str, group: str, cost: float = 0.0) -> int:
        if group not in self.layout:
            self.layout[group] = len(self._variables)
        index = len(self._variables)
        self._variables.append(Variable(name, Domain.BINARY, group))
        if cost != 0.0:
            self._objective[index] = self._objective.get(index, 0.0) + cost
        return index

    def add_constraint(self, name: str, terms: Iterable[Tuple[int, float]], sense: str, rhs: float) -> None:
        merged: Dict[int, float] = {}
        for index, coef in terms:
            merged[index] = merged.get(index, 0.0) + coef
        row = tuple((index, coef) for index, coef in merged.items() if coef != 0.0)
        self._constraints.append(Constraint(name, row, sense, float(rhs)))

    def build(self, shape: Tuple[int, int, int, int] = (0, 0, 0, 0)) -> BlpModel:
        return BlpModel(
            variables=tuple(self._variables),
            objective=tuple(sorted(self._objective.items())),
            constant=float(self.constant),
            constraints=tuple(self._constraints),
            kind=self.kind,
            layout=dict(self.layout),
            shape=shape,
        )
