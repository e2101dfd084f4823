"""Accuracy and speed metrics of a benchmark run."""

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from graph_edit_distance.bench.matrix import DistanceMatrix
from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.methods.base import MethodRole

MatrixLike = Union[DistanceMatrix, np.ndarray]


def _values(matrix: MatrixLike) -> np.ndarray:
    return matrix.values if isinstance(matrix, DistanceMatrix) else np.asarray(matrix, dtype=float)


def reference_matrix(matrices: Union[Mapping[str, DistanceMatrix], Sequence[DistanceMatrix]]) -> np.ndarray:
    """
    Entrywise minimum over the exact and upper-bounding methods.

    Lower bounds are excluded: they are not distances of any edit path.
    Cells where no method found a solution are +inf.

    Raises:
        BenchmarkError: If no exact or upper-bounding method remains, or shapes differ
    """
    candidates = list(matrices.values()) if isinstance(matrices, Mapping) else list(matrices)
    usable = [m for m in candidates if m.role is not MethodRole.LOWER_BOUND]
    if not usable:
        raise BenchmarkError("reference matrix needs at least one exact or upper-bounding method")
    shape = usable[0].values.shape
    for matrix in usable:
        if matrix.values.shape != shape:
            raise BenchmarkError(f"matrix of '{matrix.method}' has shape {matrix.values.shape}, expected {shape}")
    stacked = np.stack([np.where(np.isfinite(m.values), m.values, np.inf) for m in usable])
    return stacked.min(axis=0)


@dataclass
class Deviation:
    """
    Relative deviation of a matrix from the reference.

    Attributes:
        values: Entrywise |M - R| / R, NaN where excluded
        mean: Mean over the included entries (0 if none)
        excluded: Number of excluded entries (zero or missing reference)
    """
    values: np.ndarray
    mean: float
    excluded: int


def deviation(matrix: MatrixLike, reference, zero_reference_epsilon: Optional[float] = None) -> Deviation:
    """
    Entrywise relative deviation |M - R| / R and its mean.

    Where R = 0 the deviation is 0 if M = 0 too. Otherwise the cell is
    excluded from the mean, or gets M / epsilon when zero_reference_epsilon
    is set. Cells with a non-finite M or R are excluded.

    Raises:
        BenchmarkError: If shapes differ
    """
    m = _values(matrix)
    r = np.asarray(reference, dtype=float)
    if m.shape != r.shape:
        raise BenchmarkError(f"deviation shapes differ: {m.shape} vs {r.shape}")
    result = np.full(m.shape, np.nan)
    finite = np.isfinite(m) & np.isfinite(r)
    positive = finite & (r > 0)
    result[positive] = np.abs(m[positive] - r[positive]) / r[positive]
    zero = finite & (r == 0)
    result[zero & (m == 0)] = 0.0
    if zero_reference_epsilon is not None:
        nonzero = zero & (m != 0)
        result[nonzero] = np.abs(m[nonzero]) / zero_reference_epsilon
    included = ~np.isnan(result)
    mean = float(result[included].mean()) if included.any() else 0.0
    return Deviation(result, mean, int((~included).sum()))


def scores(
    mean_deviations: Mapping[str, Mapping[str, float]],
    mean_times: Mapping[str, Mapping[str, float]],
) -> pd.DataFrame:
    """
    Deviation and speed scores in [0, 1].

    For every subset a method's mean is divided by the largest mean of that
    subset; the score is the average of these ratios over subsets. A subset
    whose largest mean is 0 contributes 0 for every method.

    Args:
        mean_deviations: subset -> method -> mean deviation
        mean_times: subset -> method -> mean time per pair

    Returns:
        DataFrame with columns method, deviation_score, speed_score

    Raises:
        BenchmarkError: If there is no subset
    """
    if not mean_deviations:
        raise BenchmarkError("scores need at least one subset")

    def normalized(table: Mapping[str, Mapping[str, float]]) -> pd.Series:
        frame = pd.DataFrame(table).astype(float)
        maxima = frame.max(axis=0)
        ratios = frame.div(maxima.where(maxima > 0), axis=1).fillna(0.0)
        return ratios.mean(axis=1)

    methods = list(next(iter(mean_deviations.values())))
    deviation_score = normalized(mean_deviations).reindex(methods)
    speed_score = normalized(mean_times).reindex(methods)
    return pd.DataFrame({
        "method": methods,
        "deviation_score": deviation_score.to_numpy(),
        "speed_score": speed_score.to_numpy(),
    })
