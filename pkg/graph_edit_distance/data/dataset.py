"""Dataset loading and subset extraction."""

import logging
import random
from collections import OrderedDict
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.data.ingester import load_graph

logger = logging.getLogger(__name__)


def load_dataset(directory: str, pattern: str = "*.gxl") -> List[AttributedGraph]:
    """
    Load every graph file of a directory matching a glob pattern.

    Files are read in sorted file-name order. A graph without an id takes
    the file stem as its id.

    Args:
        directory: Dataset directory
        pattern: Glob pattern relative to the directory

    Returns:
        Graphs in file-name order

    Raises:
        BenchmarkError: If the directory is missing or holds no matching file
    """
    root = Path(directory)
    if not root.is_dir():
        raise BenchmarkError(f"Dataset directory not found: {directory}")
    files = sorted(p for p in root.glob(pattern) if p.is_file())
    if not files:
        raise BenchmarkError(f"No files matching '{pattern}' in {directory}")

    graphs = []
    for path in files:
        graph = load_graph(str(path))
        if not graph.graph_id:
            graph = AttributedGraph(graph.vertex_ids, graph.vertex_attrs, graph.edges, graph.directed, path.stem)
        graphs.append(graph)
    logger.info("loaded %d graphs from %s", len(graphs), directory)
    return graphs


def subsets_by_vertex_count(
    graphs: Iterable[AttributedGraph],
    sizes: Optional[Iterable[int]] = None,
    per_subset: Optional[int] = None,
    seed: int = 0,
) -> "OrderedDict[int, List[AttributedGraph]]":
    """
    Group graphs by exact vertex count.

    Args:
        graphs: Graphs to group
        sizes: Vertex counts to keep (all counts when None)
        per_subset: If given, draw at most this many graphs per subset
        seed: Seed of the per-subset sampler

    Returns:
        Mapping vertex count -> graphs, in increasing vertex count; each
        subset keeps the input order of its graphs
    """
    groups: Dict[int, List[AttributedGraph]] = {}
    for graph in graphs:
        groups.setdefault(graph.num_vertices, []).append(graph)

    wanted = sorted(groups) if sizes is None else sorted(set(sizes))
    rng = random.Random(seed)
    subsets: "OrderedDict[int, List[AttributedGraph]]" = OrderedDict()
    for size in wanted:
        members = groups.get(size, [])
        if not members:
            logger.warning("no graph with %d vertices; subset skipped", size)
            continue
        if per_subset is not None and len(members) > per_subset:
            chosen = sorted(rng.sample(range(len(members)), per_subset))
            members = [members[i] for i in chosen]
        subsets[size] = members
    return subsets
