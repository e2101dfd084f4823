"""Tree search over vertex maps: A* and beam search."""

import heapq
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from graph_edit_distance.baselines.assignment import edit_assignment
from graph_edit_distance.baselines.bipartite import bp_upper_bound
from graph_edit_distance.baselines.edit_paths import bundle_assignment, induced_edit_path
from graph_edit_distance.core.edit_path import EditPath, SolveStatus
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel

logger = logging.getLogger(__name__)

# position in G2 per processed G1 vertex; DELETED marks a deletion
Mapping = Tuple[int, ...]
DELETED = -1


@dataclass
class SearchResult:
    """
    Result of a tree search.

    Attributes:
        status: optimal, or feasible_memory_limit / feasible_timeout on a limit breach
        cost: Cost of the returned edit path
        path: Best edit path found
        expanded: Number of expanded search nodes
        wall_time: Seconds spent
    """
    status: SolveStatus
    cost: float
    path: EditPath
    expanded: int = 0
    wall_time: float = 0.0


class SearchSpace:
    """
    Partial edit paths that process the vertices of G1 in declaration order.

    A node at depth d maps the first d vertices of G1 to distinct G2 vertices
    or deletes them. Its cost g counts the vertex operations so far and every
    edge bundle whose endpoints in G1 are all processed; the edges of G2
    left without a preimage are charged at the leaf.
    """

    def __init__(self, g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel):
        self.g1 = g1
        self.g2 = g2
        self.cost_model = cost_model
        self.n1 = g1.num_vertices
        self.n2 = g2.num_vertices
        v1 = [g1.vertex_attrs[v] for v in g1.vertex_ids]
        v2 = [g2.vertex_attrs[v] for v in g2.vertex_ids]
        self.vertex_sub = np.array([[cost_model.vertex_sub(a, b) for b in v2] for a in v1]).reshape(self.n1, self.n2)
        self.vertex_del = np.array([cost_model.vertex_del(a) for a in v1])
        self.vertex_ins = np.array([cost_model.vertex_ins(b) for b in v2])
        self._bundles_1 = self._bundles(g1)
        self._bundles_2 = self._bundles(g2)
        self._edge_ins = [cost_model.edge_ins(edge.attrs) for edge in g2.edges]
        self._cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], float] = {}

    @staticmethod
    def _bundles(graph: AttributedGraph) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        position = graph.vertex_index
        bundles: Dict[Tuple[int, int], List[int]] = {}
        for index, edge in enumerate(graph.edges):
            key = (position[edge.head], position[edge.tail])
            if not graph.directed:
                key = (min(key), max(key))
            bundles.setdefault(key, []).append(index)
        return {key: tuple(indices) for key, indices in bundles.items()}

    def _pair_keys(self, a: int, b: int) -> List[Tuple[int, int]]:
        if a == b:
            return [(a, a)]
        if self.g1.directed:
            return [(a, b), (b, a)]
        return [(min(a, b), max(a, b))]

    def _image(self, key: Tuple[int, int], mapping: Mapping) -> Optional[Tuple[int, int]]:
        head, tail = mapping[key[0]], mapping[key[1]]
        if head == DELETED or tail == DELETED:
            return None
        if not self.g2.directed:
            return (min(head, tail), max(head, tail))
        return (head, tail)

    def _bundle_cost(self, first: Tuple[int, ...], second: Tuple[int, ...]) -> float:
        cached = self._cache.get((first, second))
        if cached is None:
            cached, _ = bundle_assignment(self.g1, self.g2, self.cost_model, list(first), list(second))
            self._cache[(first, second)] = cached
        return cached

    def step_cost(self, mapping: Mapping) -> float:
        """Cost added by the last decision of mapping."""
        d = len(mapping) - 1
        q = mapping[d]
        cost = self.vertex_del[d] if q == DELETED else self.vertex_sub[d, q]
        for j in range(d + 1):
            for key in self._pair_keys(d, j):
                first = self._bundles_1.get(key, ())
                image = self._image(key, mapping)
                second = self._bundles_2.get(image, ()) if image is not None else ()
                if first or second:
                    cost += self._bundle_cost(first, second)
        return float(cost)

    def completion_cost(self, mapping: Mapping) -> float:
        """Insertions of the G2 vertices and edges not reached by a complete mapping."""
        used = set(mapping)
        cost = 0.0
        for q in range(self.n2):
            if q not in used:
                cost += self.vertex_ins[q]
        position = self.g2.vertex_index
        for index, edge in enumerate(self.g2.edges):
            if position[edge.head] not in used or position[edge.tail] not in used:
                cost += self._edge_ins[index]
        return cost

    def heuristic(self, mapping: Mapping) -> float:
        """Optimal assignment of the remaining vertices using vertex costs only."""
        rows = np.arange(len(mapping), self.n1)
        used = set(mapping)
        cols = np.array([q for q in range(self.n2) if q not in used], dtype=int)
        if rows.size == 0 and cols.size == 0:
            return 0.0
        cost, _ = edit_assignment(
            self.vertex_sub[np.ix_(rows, cols)], self.vertex_del[rows], self.vertex_ins[cols]
        )
        return cost

    def children(self, mapping: Mapping) -> List[Mapping]:
        """Substitutions by each unused G2 vertex in order, then deletion."""
        used = set(mapping)
        result = [mapping + (q,) for q in range(self.n2) if q not in used]
        result.append(mapping + (DELETED,))
        return result

    def edit_path(self, mapping: Mapping) -> EditPath:
        vertex_map = {
            self.g1.vertex_ids[p]: self.g2.vertex_ids[q]
            for p, q in enumerate(mapping)
            if q != DELETED
        }
        return induced_edit_path(self.g1, self.g2, self.cost_model, vertex_map)


def astar_ged(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    memory_limit: int = 1_000_000,
    time_limit: Optional[float] = None,
) -> SearchResult:
    """
    Exact graph edit distance by A* search.

    The heuristic is an optimal assignment of the unprocessed vertices using
    vertex costs only, which never overestimates because edge costs are
    nonnegative.

    Args:
        g1: Source graph
        g2: Target graph
        cost_model: Cost model with nonnegative costs
        memory_limit: Largest allowed open list
        time_limit: Optional wall-clock limit in seconds

    Returns:
        SearchResult; optimal unless a limit stopped the search, in which case
        the best complete path found so far (or the BP path) is returned
    """
    started = time.monotonic()
    space = SearchSpace(g1, g2, cost_model)
    seq = itertools.count()
    # (f, seq, g, mapping, complete)
    open_list = [(space.heuristic(()), next(seq), 0.0, (), False)]
    best_leaf: Optional[Tuple[float, Mapping]] = None
    expanded = 0
    status = SolveStatus.OPTIMAL
    result_mapping: Optional[Mapping] = None

    while open_list:
        f, _, g, mapping, complete = heapq.heappop(open_list)
        if complete:
            result_mapping = mapping
            break
        expanded += 1
        if len(mapping) == space.n1:
            total = g + space.completion_cost(mapping)
            heapq.heappush(open_list, (total, next(seq), total, mapping, True))
            if best_leaf is None or total < best_leaf[0]:
                best_leaf = (total, mapping)
            continue
        for child in space.children(mapping):
            g_child = g + space.step_cost(child)
            heapq.heappush(open_list, (g_child + space.heuristic(child), next(seq), g_child, child, False))
        if len(open_list) > memory_limit:
            status = SolveStatus.FEASIBLE_MEMORY_LIMIT
            break
        if time_limit is not None and time.monotonic() - started > time_limit:
            status = SolveStatus.FEASIBLE_TIMEOUT
            break

    if result_mapping is None and best_leaf is not None:
        result_mapping = best_leaf[1]
    if result_mapping is not None:
        path = space.edit_path(result_mapping)
    else:
        _, path = bp_upper_bound(g1, g2, cost_model)
    wall_time = time.monotonic() - started
    logger.debug("event=astar status=%s expanded=%d cost=%.6g time=%.3f", status.value, expanded, path.total_cost, wall_time)
    return SearchResult(status, path.total_cost, path, expanded, wall_time)


def beam_search(
    g1: AttributedGraph,
    g2: AttributedGraph,
    cost_model: CostModel,
    q: int = 10,
) -> Tuple[float, EditPath]:
    """
    Beam search keeping the q most promising partial edit paths per level.

    Children are ranked by g + h, ties by generation order (parent rank,
    then G2 vertex index, deletion last).

    Args:
        g1: Source graph
        g2: Target graph
        cost_model: Cost model
        q: Beam width, at least 1

    Returns:
        (cost, EditPath); the cost is >= the exact graph edit distance
    """
    if q < 1:
        raise ValueError(f"beam width must be at least 1, got {q}")
    space = SearchSpace(g1, g2, cost_model)
    beam: List[Tuple[Mapping, float]] = [((), 0.0)]
    for _ in range(space.n1):
        ranked = []
        for mapping, g in beam:
            for child in space.children(mapping):
                g_child = g + space.step_cost(child)
                ranked.append((g_child + space.heuristic(child), len(ranked), g_child, child))
        ranked.sort(key=lambda item: (item[0], item[1]))
        beam = [(child, g_child) for _, _, g_child, child in ranked[:q]]

    best_cost, best_mapping = np.inf, ()
    for mapping, g in beam:
        total = g + space.completion_cost(mapping)
        if total < best_cost:
            best_cost, best_mapping = total, mapping
    path = space.edit_path(best_mapping)
    return path.total_cost, path
