"""Graph validation."""

from typing import Iterable, List, Optional

from graph_edit_distance.core.exceptions import GraphValidationError
from graph_edit_distance.core.graph import AttributedGraph, GraphViolation


def validate(graph: AttributedGraph) -> List[GraphViolation]:
    """
    Check the graph invariants.

    Args:
        graph: Graph to check

    Returns:
        Empty list iff all invariants hold, otherwise one entry per violation
    """
    return graph.violations()


class GraphValidator:
    """Validates graphs against the graph invariants and a cost model's attribute needs."""

    def __init__(
        self,
        required_vertex_keys: Optional[Iterable[str]] = None,
        required_edge_keys: Optional[Iterable[str]] = None
    ):
        """
        Initialize validator.

        Args:
            required_vertex_keys: Attribute keys every vertex must carry
            required_edge_keys: Attribute keys every edge must carry
        """
        self.required_vertex_keys = list(required_vertex_keys or [])
        self.required_edge_keys = list(required_edge_keys or [])

    def violations(self, graph: AttributedGraph) -> List[GraphViolation]:
        """Return invariant violations plus missing required attribute keys."""
        found = validate(graph)
        for vid in graph.vertex_ids:
            attrs = graph.vertex_attrs.get(vid, {})
            for key in self.required_vertex_keys:
                if key not in attrs:
                    found.append(GraphViolation(
                        "missing_attribute", f"vertex '{vid}' lacks required attribute '{key}'"
                    ))
        for edge in graph.edges:
            for key in self.required_edge_keys:
                if key not in edge.attrs:
                    found.append(GraphViolation(
                        "missing_attribute", f"edge '{edge.id}' lacks required attribute '{key}'"
                    ))
        return found

    def validate(self, graph: AttributedGraph) -> None:
        """
        Validate a graph.

        Raises:
            GraphValidationError: If any violation is found
        """
        found = self.violations(graph)
        if found:
            name = graph.graph_id or "<unnamed>"
            raise GraphValidationError(
                f"Graph '{name}' has {len(found)} violation(s): {found[0].message}", found
            )
