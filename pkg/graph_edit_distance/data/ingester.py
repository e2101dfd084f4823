"""Graph ingestion interface and implementations (GXL and plain text)."""

import json
import re
import xml.etree.ElementTree as ET
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, List, Tuple, Union

from graph_edit_distance.core.exceptions import GraphFormatError, GraphValidationError
from graph_edit_distance.core.graph import AttributedGraph, AttributeValue, Symbol


class GraphIngester(ABC):
    """Abstract base class for graph ingestion."""

    suffixes: Tuple[str, ...] = ()

    @abstractmethod
    def parse(self, content: Union[bytes, str], source: str = "<memory>") -> AttributedGraph:
        """
        Parse graph file content.

        Args:
            content: File content
            source: Name used in error locations

        Returns:
            The parsed graph

        Raises:
            GraphFormatError: If the content is malformed
        """
        pass

    def ingest(self, source: str) -> AttributedGraph:
        """Ingest a graph from a file path."""
        path = Path(source)
        if not path.exists():
            raise GraphFormatError(f"File not found: {source}")
        return self.parse(path.read_bytes(), source=str(path))


# --- GXL ---------------------------------------------------------------------

_GXL_DIRECTED_MODES = {"directed": True, "defaultdirected": True,
                       "undirected": False, "defaultundirected": False}


def load_gxl(content: Union[bytes, str], source: str = "<gxl>") -> AttributedGraph:
    """
    Parse a GXL document holding exactly one graph element.

    Args:
        content: GXL file content
        source: Name used in error locations

    Returns:
        AttributedGraph with vertices and edges in document order

    Raises:
        GraphFormatError: On malformed XML, missing ids, duplicate node ids,
            dangling edge endpoints or unsupported attribute kinds
    """
    try:
        root = ET.fromstring(content)
    except ET.ParseError as exc:
        line, column = exc.position
        raise GraphFormatError(f"{source}:{line}:{column}: malformed XML ({exc})")

    graphs = [root] if root.tag == "graph" else root.findall("graph")
    if len(graphs) != 1:
        raise GraphFormatError(f"{source}: expected exactly one <graph> element, found {len(graphs)}")
    graph_el = graphs[0]

    mode = graph_el.get("edgemode", "directed").strip().lower()
    if mode not in _GXL_DIRECTED_MODES:
        raise GraphFormatError(f"{source}: unsupported edgemode '{mode}'")
    directed = _GXL_DIRECTED_MODES[mode]

    vertices: List[Tuple[str, Dict[str, AttributeValue]]] = []
    seen = set()
    for ordinal, node in enumerate(graph_el.findall("node")):
        location = f"{source}: node #{ordinal}"
        node_id = node.get("id")
        if node_id is None:
            raise GraphFormatError(f"{location}: missing id attribute")
        if node_id in seen:
            raise GraphFormatError(f"{location} (id={node_id}): duplicate node id")
        seen.add(node_id)
        vertices.append((node_id, _read_attrs(node, f"{location} (id={node_id})")))

    edges = []
    edge_ids = set()
    for ordinal, edge in enumerate(graph_el.findall("edge")):
        edge_id = edge.get("id") or f"e{ordinal}"
        location = f"{source}: edge #{ordinal} (id={edge_id})"
        head, tail = edge.get("from"), edge.get("to")
        if head is None or tail is None:
            raise GraphFormatError(f"{location}: missing from/to attribute")
        for endpoint in (head, tail):
            if endpoint not in seen:
                raise GraphFormatError(f"{location}: dangling endpoint '{endpoint}'")
        if edge_id in edge_ids:
            raise GraphFormatError(f"{location}: duplicate edge id")
        edge_ids.add(edge_id)
        edges.append((edge_id, head, tail, _read_attrs(edge, location)))

    try:
        return AttributedGraph.build(vertices, edges, directed=directed, graph_id=graph_el.get("id", ""))
    except GraphValidationError as exc:
        raise GraphFormatError(f"{source}: {exc}")


def _read_attrs(element: ET.Element, location: str) -> Dict[str, AttributeValue]:
    attrs: Dict[str, AttributeValue] = {}
    for attr in element.findall("attr"):
        name = attr.get("name")
        if name is None:
            raise GraphFormatError(f"{location}: <attr> without name")
        children = list(attr)
        if len(children) != 1:
            raise GraphFormatError(f"{location}: attribute '{name}' must hold exactly one value element")
        value_el = children[0]
        text = value_el.text or ""
        try:
            if value_el.tag == "float":
                attrs[name] = float(text.strip())
            elif value_el.tag == "int":
                attrs[name] = int(text.strip())
            elif value_el.tag == "string":
                attrs[name] = text
            elif value_el.tag == "enum":
                attrs[name] = Symbol(text.strip())
            else:
                raise GraphFormatError(f"{location}: attribute '{name}' has unsupported kind <{value_el.tag}>")
        except ValueError:
            raise GraphFormatError(f"{location}: attribute '{name}' has invalid <{value_el.tag}> value '{text}'")
    return attrs


def save_gxl(graph: AttributedGraph) -> bytes:
    """
    Serialize a graph as GXL.

    Floats are written with their shortest round-trip representation so that
    load_gxl(save_gxl(g)) reproduces every value bit for bit.
    """
    root = ET.Element("gxl")
    graph_el = ET.SubElement(root, "graph", {
        "id": graph.graph_id,
        "edgeids": "true",
        "edgemode": "directed" if graph.directed else "undirected",
    })
    for vid in graph.vertex_ids:
        node = ET.SubElement(graph_el, "node", {"id": vid})
        _write_attrs(node, graph.vertex_attrs[vid])
    for edge in graph.edges:
        edge_el = ET.SubElement(graph_el, "edge", {"id": edge.id, "from": edge.head, "to": edge.tail})
        _write_attrs(edge_el, edge.attrs)
    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True)


def _write_attrs(element: ET.Element, attrs: Dict[str, AttributeValue]) -> None:
    for name, value in attrs.items():
        attr = ET.SubElement(element, "attr", {"name": name})
        if isinstance(value, Symbol):
            ET.SubElement(attr, "enum").text = str(value)
        elif isinstance(value, str):
            ET.SubElement(attr, "string").text = value
        elif isinstance(value, int):
            ET.SubElement(attr, "int").text = str(value)
        else:
            ET.SubElement(attr, "float").text = repr(float(value))


# --- plain text --------------------------------------------------------------

_TOKEN = re.compile(r'[^\s"=]+="(?:[^"\\]|\\.)*"|\S+')
_INT = re.compile(r"^[+-]?\d+$")
_FLOAT = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def load_text(content: Union[bytes, str], source: str = "<text>") -> AttributedGraph:
    """
    Parse the plain-text debug format (grammar in docs/FORMATS.md).

    Raises:
        GraphFormatError: On unknown line kinds or malformed values, with line number
    """
    if isinstance(content, bytes):
        content = content.decode("utf-8")
    directed, graph_id = True, ""
    vertices, edges = [], []
    seen_vertices, seen_edges = set(), set()

    for number, raw_line in enumerate(content.splitlines(), 1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = _TOKEN.findall(line)
        location = f"{source}:{number}"
        kind = tokens[0]
        if kind == "graph":
            if len(tokens) != 3 or tokens[2] not in ("directed", "undirected"):
                raise GraphFormatError(f"{location}: expected 'graph <id> directed|undirected'")
            graph_id = "" if tokens[1] == "-" else tokens[1]
            directed = tokens[2] == "directed"
        elif kind == "v":
            if len(tokens) < 2:
                raise GraphFormatError(f"{location}: expected 'v <id> key=value ...'")
            if tokens[1] in seen_vertices:
                raise GraphFormatError(f"{location}: duplicate vertex id '{tokens[1]}'")
            seen_vertices.add(tokens[1])
            vertices.append((tokens[1], _parse_pairs(tokens[2:], location)))
        elif kind == "e":
            if len(tokens) < 4:
                raise GraphFormatError(f"{location}: expected 'e <id> <head> <tail> key=value ...'")
            eid, head, tail = tokens[1:4]
            if eid in seen_edges:
                raise GraphFormatError(f"{location}: duplicate edge id '{eid}'")
            for endpoint in (head, tail):
                if endpoint not in seen_vertices:
                    raise GraphFormatError(f"{location}: dangling endpoint '{endpoint}'")
            seen_edges.add(eid)
            edges.append((eid, head, tail, _parse_pairs(tokens[4:], location)))
        else:
            raise GraphFormatError(f"{location}: unknown line kind '{kind}'")

    try:
        return AttributedGraph.build(vertices, edges, directed=directed, graph_id=graph_id)
    except GraphValidationError as exc:
        raise GraphFormatError(f"{source}: {exc}")


def _parse_pairs(tokens: List[str], location: str) -> Dict[str, AttributeValue]:
    attrs: Dict[str, AttributeValue] = {}
    for token in tokens:
        if "=" not in token:
            raise GraphFormatError(f"{location}: expected key=value, got '{token}'")
        key, raw = token.split("=", 1)
        if not key or not raw:
            raise GraphFormatError(f"{location}: empty key or value in '{token}'")
        attrs[key] = _parse_value(raw, location)
    return attrs


def _parse_value(raw: str, location: str) -> AttributeValue:
    if raw.startswith('"'):
        try:
            return json.loads(raw)
        except json.JSONDecodeError:
            raise GraphFormatError(f"{location}: malformed quoted value {raw}")
    if _INT.match(raw):
        return int(raw)
    if _FLOAT.match(raw):
        return float(raw)
    return Symbol(raw)


def save_text(graph: AttributedGraph) -> str:
    """Serialize a graph in the plain-text debug format."""
    lines = [f"graph {graph.graph_id or '-'} {'directed' if graph.directed else 'undirected'}"]
    for vid in graph.vertex_ids:
        lines.append(" ".join(["v", vid] + _format_pairs(graph.vertex_attrs[vid])))
    for edge in graph.edges:
        lines.append(" ".join(["e", edge.id, edge.head, edge.tail] + _format_pairs(edge.attrs)))
    return "\n".join(lines) + "\n"


def _format_pairs(attrs: Dict[str, AttributeValue]) -> List[str]:
    pairs = []
    for key, value in attrs.items():
        if isinstance(value, Symbol):
            text = str(value)
            if _INT.match(text) or _FLOAT.match(text) or re.search(r'[\s"=#]', text):
                raise GraphFormatError(f"symbol '{text}' cannot be written as a bare word")
        elif isinstance(value, str):
            text = json.dumps(value)
        elif isinstance(value, int):
            text = str(value)
        else:
            text = repr(float(value))
        pairs.append(f"{key}={text}")
    return pairs


class GxlIngester(GraphIngester):
    """Ingests graphs from GXL files."""

    suffixes = (".gxl", ".xml")

    def parse(self, content: Union[bytes, str], source: str = "<memory>") -> AttributedGraph:
        return load_gxl(content, source)


class TextIngester(GraphIngester):
    """Ingests graphs from the plain-text debug format."""

    suffixes = (".txt", ".graph")

    def parse(self, content: Union[bytes, str], source: str = "<memory>") -> AttributedGraph:
        return load_text(content, source)


_INGESTERS: List[GraphIngester] = [GxlIngester(), TextIngester()]


def load_graph(source: str) -> AttributedGraph:
    """
    Load a graph file, choosing the format by file extension.

    Raises:
        GraphFormatError: If the extension is unknown or parsing fails
    """
    suffix = Path(source).suffix.lower()
    for ingester in _INGESTERS:
        if suffix in ingester.suffixes:
            return ingester.ingest(source)
    raise GraphFormatError(f"Unknown graph file extension '{suffix}' for {source}")


def save_graph(graph: AttributedGraph, target: str) -> None:
    """Write a graph file, choosing the format by file extension."""
    path = Path(target)
    if path.suffix.lower() in TextIngester.suffixes:
        path.write_text(save_text(graph), encoding="utf-8")
    else:
        path.write_bytes(save_gxl(graph))
