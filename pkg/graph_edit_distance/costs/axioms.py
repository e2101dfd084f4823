"""Cost axiom checks (triangle inequalities and symmetry)."""

from dataclasses import dataclass
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple

from graph_edit_distance.core.graph import AttributeMap
from graph_edit_distance.costs.base import CostModel

_RELATIVE_TOL = 1e-9


@dataclass(frozen=True)
class AxiomViolation:
    """
    A sampled triple (or pair) breaking one cost axiom.

    Attributes:
        kind: Axiom name, e.g. 'vertex_substitution_triangle'
        items: Indices of the offending samples
        lhs: Left-hand side of the inequality or equality
        rhs: Right-hand side
    """
    kind: str
    items: Tuple[int, ...]
    lhs: float
    rhs: float


def _exceeds(lhs: float, rhs: float) -> bool:
    return lhs > rhs + _RELATIVE_TOL * max(1.0, abs(lhs), abs(rhs))


def _differs(lhs: float, rhs: float) -> bool:
    return abs(lhs - rhs) > _RELATIVE_TOL * max(1.0, abs(lhs), abs(rhs))


def _check_family(
    prefix: str,
    samples: Sequence[AttributeMap],
    sub: Callable[[AttributeMap, AttributeMap], float],
    delete: Callable[[AttributeMap], float],
    insert: Callable[[AttributeMap], float],
) -> List[AxiomViolation]:
    found: List[AxiomViolation] = []
    n = len(samples)
    subs = [[sub(samples[a], samples[b]) for b in range(n)] for a in range(n)]
    dels = [delete(s) for s in samples]
    ins = [insert(s) for s in samples]

    for a, b in product(range(n), repeat=2):
        if _differs(subs[a][b], subs[b][a]):
            found.append(AxiomViolation(f"{prefix}_substitution_symmetry", (a, b), subs[a][b], subs[b][a]))
        # the empty element is an admissible intermediate of every triangle
        if _exceeds(subs[a][b], dels[a] + ins[b]):
            found.append(AxiomViolation(f"{prefix}_substitution_triangle", (a, -1, b), subs[a][b], dels[a] + ins[b]))
    for a in range(n):
        if _differs(dels[a], ins[a]):
            found.append(AxiomViolation(f"{prefix}_deletion_insertion_symmetry", (a,), dels[a], ins[a]))

    for a, b, c in product(range(n), repeat=3):
        if _exceeds(subs[a][b], subs[a][c] + subs[c][b]):
            found.append(AxiomViolation(
                f"{prefix}_substitution_triangle", (a, c, b), subs[a][b], subs[a][c] + subs[c][b]
            ))
    for a, c in product(range(n), repeat=2):
        if _exceeds(dels[a], subs[a][c] + dels[c]):
            found.append(AxiomViolation(f"{prefix}_deletion_triangle", (a, c), dels[a], subs[a][c] + dels[c]))
        if _exceeds(ins[a], ins[c] + subs[c][a]):
            found.append(AxiomViolation(f"{prefix}_insertion_triangle", (c, a), ins[a], ins[c] + subs[c][a]))
    return found


def check_cost_axioms(
    model: CostModel,
    samples: Sequence[AttributeMap],
    edge_samples: Optional[Sequence[AttributeMap]] = None,
) -> List[AxiomViolation]:
    """
    Check the cost axioms on every sampled triple.

    Vertex costs are checked on samples, edge costs on edge_samples when
    given. For each family the checks are: substitution symmetry,
    deletion/insertion symmetry, and the substitution, deletion and
    insertion triangle inequalities (the empty element counts as an
    intermediate, so a substitution may not cost more than deleting and
    re-inserting).

    Args:
        model: Cost model to check
        samples: Vertex attribute maps (nonempty)
        edge_samples: Optional edge attribute maps

    Returns:
        The violating triples, empty when every axiom holds
    """
    if not samples:
        raise ValueError("check_cost_axioms needs at least one sample")
    found = _check_family("vertex", samples, model.vertex_sub, model.vertex_del, model.vertex_ins)
    if edge_samples:
        found.extend(_check_family("edge", edge_samples, model.edge_sub, model.edge_del, model.edge_ins))
    return found
