"""Linear sum assignment and the edit-operation assignment matrix."""

from typing import List, Sequence, Tuple

import numpy as np

from graph_edit_distance.core.exceptions import AssignmentError

# forbidden cells of an edit assignment matrix
SENTINEL = 1e12


def hungarian(costs) -> Tuple[List[int], float]:
    """
    Minimum-cost perfect assignment by the Hungarian method.

    Shortest augmenting paths with row and column potentials, O(n^3).
    Ties are resolved towards the lowest column index, so results are
    deterministic.

    Args:
        costs: Square matrix of finite costs

    Returns:
        (permutation, total cost) where row i is assigned to column permutation[i]

    Raises:
        AssignmentError: If the matrix is not square or holds non-finite values
    """
    c = np.asarray(costs, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise AssignmentError(f"assignment needs a square matrix, got shape {c.shape}")
    if not np.all(np.isfinite(c)):
        raise AssignmentError("assignment matrix holds non-finite values")
    n = c.shape[0]
    if n == 0:
        return [], 0.0

    # 1-based potentials; column 0 is the virtual start of each augmenting path
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    owner = np.zeros(n + 1, dtype=int)
    way = np.zeros(n + 1, dtype=int)
    for row in range(1, n + 1):
        owner[0] = row
        j0 = 0
        minv = np.full(n + 1, np.inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = owner[j0]
            free = np.flatnonzero(~used[1:]) + 1
            reduced = c[i0 - 1, free - 1] - u[i0] - v[free]
            better = reduced < minv[free]
            minv[free[better]] = reduced[better]
            way[free[better]] = j0
            j1 = free[np.argmin(minv[free])]
            delta = minv[j1]
            u[owner[used]] += delta
            v[used] -= delta
            minv[~used] -= delta
            j0 = j1
            if owner[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1

    permutation = [0] * n
    for col in range(1, n + 1):
        permutation[owner[col] - 1] = col - 1
    total = 0.0
    for i in range(n):
        total += c[i, permutation[i]]
    return permutation, total


def assignment_matrix(substitution, deletion: Sequence[float], insertion: Sequence[float]) -> np.ndarray:
    """
    Square (n1+n2) x (n1+n2) edit assignment matrix.

    Layout: substitution block top left, deletion diagonal top right,
    insertion diagonal bottom left, zero block bottom right. Off-diagonal
    cells of the deletion and insertion blocks hold SENTINEL.
    """
    n1, n2 = len(deletion), len(insertion)
    sub = np.asarray(substitution, dtype=float).reshape(n1, n2)
    size = n1 + n2
    matrix = np.zeros((size, size))
    matrix[:n1, :n2] = sub
    matrix[:n1, n2:] = SENTINEL
    matrix[n1:, :n2] = SENTINEL
    if n1:
        matrix[np.arange(n1), n2 + np.arange(n1)] = deletion
    if n2:
        matrix[n1 + np.arange(n2), np.arange(n2)] = insertion
    return matrix


def edit_assignment(substitution, deletion: Sequence[float], insertion: Sequence[float]) -> Tuple[float, List[Tuple[int, int]]]:
    """
    Optimal substitution of two item lists with free deletions and insertions.

    Returns:
        (cost, substituted (i, k) pairs in row order)
    """
    n1, n2 = len(deletion), len(insertion)
    if n1 == 0:
        return float(sum(insertion)), []
    if n2 == 0:
        return float(sum(deletion)), []
    permutation, total = hungarian(assignment_matrix(substitution, deletion, insertion))
    pairs = [(i, permutation[i]) for i in range(n1) if permutation[i] < n2]
    return total, pairs
