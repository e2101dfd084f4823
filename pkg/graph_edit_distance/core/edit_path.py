"""Edit path data classes."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

from graph_edit_distance.core.graph import AttributedGraph


class SolveStatus(Enum):
    """Outcome of a distance computation."""
    OPTIMAL = "optimal"
    FEASIBLE_TIMEOUT = "feasible_timeout"
    FEASIBLE_MEMORY_LIMIT = "feasible_memory_limit"
    NO_SOLUTION_TIMEOUT = "no_solution_timeout"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    HEURISTIC = "heuristic"

    @property
    def has_solution(self) -> bool:
        return self in (
            SolveStatus.OPTIMAL,
            SolveStatus.FEASIBLE_TIMEOUT,
            SolveStatus.FEASIBLE_MEMORY_LIMIT,
            SolveStatus.HEURISTIC,
        )


Pair = Tuple[str, str]


@dataclass(frozen=True)
class EditPath:
    """
    An edit path between two graphs, encoded as the six edit decisions.

    Attributes:
        vertex_substitutions: (i, k) pairs, vertex i of G1 substituted by k of G2 (x)
        edge_substitutions: (ij, kl) pairs of edge ids (y)
        deleted_vertices: Vertices of G1 not substituted (u)
        inserted_vertices: Vertices of G2 not used by a substitution (v)
        deleted_edges: Edges of G1 not substituted (e)
        inserted_edges: Edges of G2 not used by a substitution (f)
        total_cost: Sum of the elementary edit costs
    """
    vertex_substitutions: Tuple[Pair, ...]
    edge_substitutions: Tuple[Pair, ...]
    deleted_vertices: Tuple[str, ...]
    inserted_vertices: Tuple[str, ...]
    deleted_edges: Tuple[str, ...]
    inserted_edges: Tuple[str, ...]
    total_cost: float = 0.0

    @classmethod
    def from_substitutions(
        cls,
        g1: AttributedGraph,
        g2: AttributedGraph,
        vertex_pairs: Iterable[Pair],
        edge_pairs: Iterable[Pair],
        cost_model=None,
    ) -> "EditPath":
        """
        Derive deletions and insertions from the substitutions.

        Args:
            g1: Source graph
            g2: Target graph
            vertex_pairs: Substituted vertex pairs
            edge_pairs: Substituted edge pairs
            cost_model: If given, total_cost is computed from it

        Returns:
            EditPath with every tuple in graph declaration order
        """
        x = sorted(set(vertex_pairs), key=lambda p: (g1.vertex_index.get(p[0], -1), g2.vertex_index.get(p[1], -1)))
        y = sorted(set(edge_pairs), key=lambda p: (g1.edge_index.get(p[0], -1), g2.edge_index.get(p[1], -1)))
        mapped_1 = {i for i, _ in x}
        mapped_2 = {k for _, k in x}
        used_1 = {ij for ij, _ in y}
        used_2 = {kl for _, kl in y}
        path = cls(
            vertex_substitutions=tuple(x),
            edge_substitutions=tuple(y),
            deleted_vertices=tuple(v for v in g1.vertex_ids if v not in mapped_1),
            inserted_vertices=tuple(v for v in g2.vertex_ids if v not in mapped_2),
            deleted_edges=tuple(e.id for e in g1.edges if e.id not in used_1),
            inserted_edges=tuple(e.id for e in g2.edges if e.id not in used_2),
        )
        if cost_model is not None:
            path = path.with_cost(edit_path_cost(path, g1, g2, cost_model))
        return path

    def with_cost(self, total_cost: float) -> "EditPath":
        return EditPath(
            self.vertex_substitutions,
            self.edge_substitutions,
            self.deleted_vertices,
            self.inserted_vertices,
            self.deleted_edges,
            self.inserted_edges,
            float(total_cost),
        )

    @property
    def vertex_map(self) -> Dict[str, str]:
        return dict(self.vertex_substitutions)

    def violations(self, g1: AttributedGraph, g2: AttributedGraph) -> List[str]:
        """
        Check injectivity, completeness and topological consistency.

        Returns:
            Human-readable violation messages, empty for a valid edit path
        """
        found: List[str] = []
        x = self.vertex_substitutions
        y = self.edge_substitutions

        for i, k in x:
            if i not in g1.vertex_index:
                found.append(f"substituted vertex '{i}' is not in G1")
            if k not in g2.vertex_index:
                found.append(f"substituting vertex '{k}' is not in G2")
        if len({i for i, _ in x}) != len(x) or len({k for _, k in x}) != len(x):
            found.append("vertex substitutions are not an injective partial map")
        for ij, kl in y:
            if ij not in g1.edge_index:
                found.append(f"substituted edge '{ij}' is not in G1")
            if kl not in g2.edge_index:
                found.append(f"substituting edge '{kl}' is not in G2")
        if len({ij for ij, _ in y}) != len(y) or len({kl for _, kl in y}) != len(y):
            found.append("edge substitutions are not an injective partial map")

        expected = EditPath.from_substitutions(g1, g2, x, y)
        if set(self.deleted_vertices) != set(expected.deleted_vertices):
            found.append("deleted vertices differ from the vertices left unmapped")
        if set(self.inserted_vertices) != set(expected.inserted_vertices):
            found.append("inserted vertices differ from the vertices left unused")
        if set(self.deleted_edges) != set(expected.deleted_edges):
            found.append("deleted edges differ from the edges left unmapped")
        if set(self.inserted_edges) != set(expected.inserted_edges):
            found.append("inserted edges differ from the edges left unused")

        vertex_map = self.vertex_map
        for ij, kl in y:
            if ij not in g1.edge_index or kl not in g2.edge_index:
                continue
            e1 = g1.edges[g1.edge_index[ij]]
            e2 = g2.edges[g2.edge_index[kl]]
            forward = vertex_map.get(e1.head) == e2.head and vertex_map.get(e1.tail) == e2.tail
            backward = vertex_map.get(e1.head) == e2.tail and vertex_map.get(e1.tail) == e2.head
            if not (forward or (not g1.directed and backward)):
                found.append(f"edge substitution ({ij}, {kl}) is not consistent with the vertex map")
        return found

    def to_dict(self) -> Dict[str, Any]:
        """Convert the edit path to a dictionary for serialization."""
        return {
            "vertex_substitutions": [list(p) for p in self.vertex_substitutions],
            "edge_substitutions": [list(p) for p in self.edge_substitutions],
            "deleted_vertices": list(self.deleted_vertices),
            "inserted_vertices": list(self.inserted_vertices),
            "deleted_edges": list(self.deleted_edges),
            "inserted_edges": list(self.inserted_edges),
            "total_cost": self.total_cost,
        }


def edit_path_cost(path: EditPath, g1: AttributedGraph, g2: AttributedGraph, cost_model) -> float:
    """
    Recompute the total cost of an edit path from a cost model.

    The terms are summed in a fixed order (substitutions, deletions and
    insertions, vertices before edges) so repeated calls agree bit for bit.
    """
    total = 0.0
    for i, k in path.vertex_substitutions:
        total += cost_model.vertex_sub(g1.vertex_attrs[i], g2.vertex_attrs[k])
    for i in path.deleted_vertices:
        total += cost_model.vertex_del(g1.vertex_attrs[i])
    for k in path.inserted_vertices:
        total += cost_model.vertex_ins(g2.vertex_attrs[k])
    for ij, kl in path.edge_substitutions:
        total += cost_model.edge_sub(g1.edges[g1.edge_index[ij]].attrs, g2.edges[g2.edge_index[kl]].attrs)
    for ij in path.deleted_edges:
        total += cost_model.edge_del(g1.edges[g1.edge_index[ij]].attrs)
    for kl in path.inserted_edges:
        total += cost_model.edge_ins(g2.edges[g2.edge_index[kl]].attrs)
    return total


def describe_path(path: Optional[EditPath], g1: AttributedGraph, g2: AttributedGraph) -> str:
    """Short multi-line summary of an edit path for terminal output."""
    if path is None:
        return "no edit path"
    lines = [
        f"vertex substitutions: {len(path.vertex_substitutions)} of |V1|={g1.num_vertices}, |V2|={g2.num_vertices}",
        f"edge substitutions:   {len(path.edge_substitutions)} of |E1|={g1.num_edges}, |E2|={g2.num_edges}",
        f"deleted:  {len(path.deleted_vertices)} vertices, {len(path.deleted_edges)} edges",
        f"inserted: {len(path.inserted_vertices)} vertices, {len(path.inserted_edges)} edges",
    ]
    if path.vertex_substitutions:
        mapping = ", ".join(f"{i}->{k}" for i, k in path.vertex_substitutions)
        lines.append(f"vertex map: {mapping}")
    return "\n".join(lines)
