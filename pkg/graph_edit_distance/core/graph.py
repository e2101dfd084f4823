"""Attributed graph data classes."""

import math
import sys
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from graph_edit_distance.core.exceptions import GraphValidationError


class Symbol(str):
    """
    Interned symbolic attribute value (e.g. an atom label or a node type).

    Compares equal to the plain string with the same characters; the type is
    kept so that files round-trip the attribute kind.
    """

    def __new__(cls, value: str):
        return super().__new__(cls, sys.intern(str(value)))

    def __repr__(self) -> str:
        return f"Symbol({str.__repr__(self)})"

    def __reduce__(self):
        return (Symbol, (str(self),))


AttributeValue = Union[int, float, str, Symbol]
AttributeMap = Dict[str, AttributeValue]


@dataclass(frozen=True)
class Edge:
    """
    A single edge of an attributed graph.

    Attributes:
        id: Unique edge identifier within its graph
        head: Initial vertex id (smaller endpoint for undirected graphs)
        tail: Terminal vertex id
        attrs: Attribute map of the edge
    """
    id: str
    head: str
    tail: str
    attrs: AttributeMap = field(default_factory=dict)

    @property
    def is_loop(self) -> bool:
        return self.head == self.tail


@dataclass(frozen=True)
class GraphViolation:
    """One broken graph invariant, reported as data."""
    kind: str
    message: str


@dataclass(frozen=True)
class AttributedGraph:
    """
    Attributed graph with ordered vertices and id-carrying edges.

    Vertex and edge order is the order of declaration; it fixes the
    variable indexing of every formulation built from the graph. Instances
    are treated as immutable and may be shared across worker processes.

    Attributes:
        vertex_ids: Ordered vertex identifiers
        vertex_attrs: Vertex id -> attribute map
        edges: Ordered edges
        directed: True for directed graphs
        graph_id: Identifier taken from the source file, may be empty
    """
    vertex_ids: Tuple[str, ...]
    vertex_attrs: Mapping[str, AttributeMap]
    edges: Tuple[Edge, ...]
    directed: bool = True
    graph_id: str = ""

    @classmethod
    def build(
        cls,
        vertices: Iterable[Tuple[str, Mapping[str, AttributeValue]]],
        edges: Iterable[Tuple[str, str, str, Mapping[str, AttributeValue]]],
        directed: bool = True,
        graph_id: str = "",
    ) -> "AttributedGraph":
        """
        Build a graph, canonicalizing undirected edges and validating it.

        Args:
            vertices: (vertex id, attribute map) pairs in order
            edges: (edge id, head, tail, attribute map) tuples in order
            directed: Directedness flag
            graph_id: Optional graph identifier

        Returns:
            A validated AttributedGraph

        Raises:
            GraphValidationError: If any graph invariant is violated
        """
        vertex_list = [(str(vid), dict(attrs)) for vid, attrs in vertices]
        vertex_ids = tuple(vid for vid, _ in vertex_list)
        position = {}
        for index, vid in enumerate(vertex_ids):
            position.setdefault(vid, index)

        edge_list = []
        for eid, head, tail, attrs in edges:
            head, tail = str(head), str(tail)
            if not directed and position.get(tail, -1) < position.get(head, -1) and tail in position:
                head, tail = tail, head
            edge_list.append(Edge(str(eid), head, tail, dict(attrs)))

        graph = cls(
            vertex_ids=vertex_ids,
            vertex_attrs={vid: attrs for vid, attrs in vertex_list},
            edges=tuple(edge_list),
            directed=directed,
            graph_id=graph_id,
        )
        violations = graph.violations()
        if violations:
            details = "; ".join(v.message for v in violations)
            raise GraphValidationError(f"Invalid graph '{graph_id}': {details}", violations)
        return graph

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_index(self) -> Dict[str, int]:
        """Vertex id -> position in declaration order."""
        return {vid: index for index, vid in enumerate(self.vertex_ids)}

    @cached_property
    def edge_index(self) -> Dict[str, int]:
        """Edge id -> position in declaration order."""
        return {edge.id: index for index, edge in enumerate(self.edges)}

    @cached_property
    def incident_edges(self) -> Dict[str, Tuple[int, ...]]:
        """Vertex id -> indices of incident edges (loops listed once)."""
        incident: Dict[str, List[int]] = {vid: [] for vid in self.vertex_ids}
        for index, edge in enumerate(self.edges):
            incident[edge.head].append(index)
            if edge.tail != edge.head:
                incident[edge.tail].append(index)
        return {vid: tuple(indices) for vid, indices in incident.items()}

    @cached_property
    def out_edges(self) -> Dict[str, Tuple[int, ...]]:
        """Vertex id -> indices of edges whose head is the vertex."""
        result: Dict[str, List[int]] = {vid: [] for vid in self.vertex_ids}
        for index, edge in enumerate(self.edges):
            result[edge.head].append(index)
        return {vid: tuple(indices) for vid, indices in result.items()}

    @cached_property
    def in_edges(self) -> Dict[str, Tuple[int, ...]]:
        """Vertex id -> indices of edges whose tail is the vertex."""
        result: Dict[str, List[int]] = {vid: [] for vid in self.vertex_ids}
        for index, edge in enumerate(self.edges):
            result[edge.tail].append(index)
        return {vid: tuple(indices) for vid, indices in result.items()}

    @cached_property
    def has_parallel_edges(self) -> bool:
        seen = set()
        for edge in self.edges:
            key = self.endpoint_key(edge.head, edge.tail)
            if key in seen:
                return True
            seen.add(key)
        return False

    @cached_property
    def has_loops(self) -> bool:
        return any(edge.is_loop for edge in self.edges)

    def endpoint_key(self, a: str, b: str) -> Tuple[str, str]:
        """Key identifying the bundle of edges between two vertices."""
        if self.directed:
            return (a, b)
        if self.vertex_index.get(b, -1) < self.vertex_index.get(a, -1):
            return (b, a)
        return (a, b)

    def attrs(self, vertex_id: str) -> AttributeMap:
        return self.vertex_attrs[vertex_id]

    def violations(self) -> List[GraphViolation]:
        """
        Check the graph invariants.

        Returns:
            One GraphViolation per broken invariant, empty if the graph is well-formed
        """
        found: List[GraphViolation] = []

        seen_vertices = set()
        for vid in self.vertex_ids:
            if vid in seen_vertices:
                found.append(GraphViolation("duplicate_vertex_id", f"duplicate vertex id '{vid}'"))
            seen_vertices.add(vid)
            if vid not in self.vertex_attrs:
                found.append(GraphViolation("missing_attributes", f"vertex '{vid}' has no attribute map"))
        for vid in self.vertex_attrs:
            if vid not in seen_vertices:
                found.append(GraphViolation("undeclared_vertex", f"attributes given for undeclared vertex '{vid}'"))

        seen_edges = set()
        for edge in self.edges:
            if edge.id in seen_edges:
                found.append(GraphViolation("duplicate_edge_id", f"duplicate edge id '{edge.id}'"))
            seen_edges.add(edge.id)
            for endpoint in (edge.head, edge.tail):
                if endpoint not in seen_vertices:
                    found.append(GraphViolation(
                        "dangling_endpoint",
                        f"edge '{edge.id}' references missing vertex '{endpoint}'",
                    ))
            if (not self.directed and edge.head in seen_vertices and edge.tail in seen_vertices
                    and self.vertex_index[edge.tail] < self.vertex_index[edge.head]):
                found.append(GraphViolation(
                    "non_canonical_edge",
                    f"undirected edge '{edge.id}' is not stored in canonical endpoint order",
                ))

        for vid, attrs in self.vertex_attrs.items():
            found.extend(_attribute_violations(f"vertex '{vid}'", attrs))
        for edge in self.edges:
            found.extend(_attribute_violations(f"edge '{edge.id}'", edge.attrs))
        return found


def _attribute_violations(owner: str, attrs: Mapping[str, AttributeValue]) -> List[GraphViolation]:
    found = []
    for name, value in attrs.items():
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            found.append(GraphViolation(
                "bad_attribute_type",
                f"{owner} attribute '{name}' has unsupported type {type(value).__name__}",
            ))
        elif isinstance(value, Symbol):
            if not value:
                found.append(GraphViolation("empty_symbol", f"{owner} attribute '{name}' is an empty symbol"))
        elif isinstance(value, float) and not math.isfinite(value):
            found.append(GraphViolation("non_finite_number", f"{owner} attribute '{name}' is not finite"))
    return found


def attribute_kind(value: AttributeValue) -> str:
    """Return 'symbol', 'text', 'int' or 'float' for an attribute value."""
    if isinstance(value, Symbol):
        return "symbol"
    if isinstance(value, str):
        return "text"
    if isinstance(value, int):
        return "int"
    return "float"


def structurally_equal(g1: AttributedGraph, g2: AttributedGraph) -> bool:
    """
    Compare two graphs including attribute value kinds.

    Attribute maps are compared as mappings, so their key order is ignored.
    """
    if (g1.directed != g2.directed or g1.vertex_ids != g2.vertex_ids
            or len(g1.edges) != len(g2.edges)):
        return False

    def same_attrs(a: Mapping[str, AttributeValue], b: Mapping[str, AttributeValue]) -> bool:
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] and attribute_kind(a[k]) == attribute_kind(b[k]) for k in a)

    for vid in g1.vertex_ids:
        if not same_attrs(g1.vertex_attrs[vid], g2.vertex_attrs[vid]):
            return False
    for e1, e2 in zip(g1.edges, g2.edges):
        if (e1.id, e1.head, e1.tail) != (e2.id, e2.head, e2.tail) or not same_attrs(e1.attrs, e2.attrs):
            return False
    return True


def empty_graph(directed: bool = True, graph_id: str = "") -> AttributedGraph:
    return AttributedGraph(vertex_ids=(), vertex_attrs={}, edges=(), directed=directed, graph_id=graph_id)


def reversed_view(graph: AttributedGraph, vertex_order: Optional[Iterable[str]] = None) -> AttributedGraph:
    """Return the same graph with vertices re-declared in another order."""
    order = tuple(vertex_order) if vertex_order is not None else tuple(reversed(graph.vertex_ids))
    return AttributedGraph.build(
        [(vid, graph.vertex_attrs[vid]) for vid in order],
        [(e.id, e.head, e.tail, e.attrs) for e in graph.edges],
        directed=graph.directed,
        graph_id=graph.graph_id,
    )
