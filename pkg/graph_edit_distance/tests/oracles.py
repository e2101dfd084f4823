"""Brute-force reference implementations used as test oracles."""

import itertools
import math
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel


def partial_maps(n1: int, n2: int) -> Iterator[Tuple[Optional[int], ...]]:
    """Every injective partial map {0..n1-1} -> {0..n2-1}; None marks a deletion."""
    def extend(prefix: Tuple[Optional[int], ...], used: frozenset):
        if len(prefix) == n1:
            yield prefix
            return
        yield from extend(prefix + (None,), used)
        for q in range(n2):
            if q not in used:
                yield from extend(prefix + (q,), used | {q})
    yield from extend((), frozenset())


def brute_force_ged(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> float:
    """
    Exact GED of two simple graphs by enumerating every vertex map.

    For a fixed vertex map the best completion substitutes an edge whose
    image exists when that is cheaper than deleting and inserting it.
    """
    def key(graph, a, b):
        return (a, b) if graph.directed else frozenset((a, b))

    targets = {key(g2, e.head, e.tail): e for e in g2.edges}
    best = math.inf
    for images in partial_maps(g1.num_vertices, g2.num_vertices):
        cost = 0.0
        mapping = {}
        for p, q in enumerate(images):
            a = g1.vertex_attrs[g1.vertex_ids[p]]
            if q is None:
                cost += cost_model.vertex_del(a)
            else:
                cost += cost_model.vertex_sub(a, g2.vertex_attrs[g2.vertex_ids[q]])
                mapping[g1.vertex_ids[p]] = g2.vertex_ids[q]
        used = {q for q in images if q is not None}
        for q, k in enumerate(g2.vertex_ids):
            if q not in used:
                cost += cost_model.vertex_ins(g2.vertex_attrs[k])

        matched = set()
        for edge in g1.edges:
            image = None
            if edge.head in mapping and edge.tail in mapping:
                image = targets.get(key(g2, mapping[edge.head], mapping[edge.tail]))
            if image is None:
                cost += cost_model.edge_del(edge.attrs)
                continue
            matched.add(image.id)
            cost += min(
                cost_model.edge_sub(edge.attrs, image.attrs),
                cost_model.edge_del(edge.attrs) + cost_model.edge_ins(image.attrs),
            )
        for edge in g2.edges:
            if edge.id not in matched:
                cost += cost_model.edge_ins(edge.attrs)
        best = min(best, cost)
    return best


def brute_force_assignment(costs) -> float:
    """Minimum over all permutations."""
    c = np.asarray(costs, dtype=float)
    n = c.shape[0]
    if n == 0:
        return 0.0
    return min(sum(c[i, p[i]] for i in range(n)) for p in itertools.permutations(range(n)))


def recursive_string_distance(s1: str, s2: str) -> int:
    """Levenshtein distance straight from its recursive definition."""
    @lru_cache(maxsize=None)
    def distance(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            distance(i - 1, j) + 1,
            distance(i, j - 1) + 1,
            distance(i - 1, j - 1) + (s1[i - 1] != s2[j - 1]),
        )
    return distance(len(s1), len(s2))


def brute_force_binary_program(c: Sequence[float], a_ub, b_ub, constant: float = 0.0) -> float:
    """Minimum of constant + c.x over x in {0, 1}^n with A_ub x <= b_ub."""
    a = np.asarray(a_ub, dtype=float)
    b = np.asarray(b_ub, dtype=float)
    best = math.inf
    for bits in itertools.product((0.0, 1.0), repeat=len(c)):
        x = np.array(bits)
        if a.size == 0 or np.all(a @ x <= b + 1e-9):
            best = min(best, constant + float(np.dot(c, x)))
    return best


def random_cost_rows(rng: np.random.Generator, size: int, low: float = 0.0, high: float = 10.0) -> List[List[float]]:
    return rng.uniform(low, high, size=(size, size)).tolist()
