"""Builders of the F1, F2, F2-alt and F2u graph edit distance programs."""

from typing import Callable, Dict

from graph_edit_distance.core.exceptions import FormulationError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.formulations.model import EQUAL, LESS_EQUAL, BlpModel, ModelBuilder


class _PairCosts:
    """All elementary costs of a graph pair, evaluated once."""

    def __init__(self, g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel):
        v1 = [g1.vertex_attrs[v] for v in g1.vertex_ids]
        v2 = [g2.vertex_attrs[v] for v in g2.vertex_ids]
        self.vertex_sub = [[cost_model.vertex_sub(a, b) for b in v2] for a in v1]
        self.vertex_del = [cost_model.vertex_del(a) for a in v1]
        self.vertex_ins = [cost_model.vertex_ins(b) for b in v2]
        self.edge_sub = [[cost_model.edge_sub(e.attrs, f.attrs) for f in g2.edges] for e in g1.edges]
        self.edge_del = [cost_model.edge_del(e.attrs) for e in g1.edges]
        self.edge_ins = [cost_model.edge_ins(f.attrs) for f in g2.edges]

    def deletion_insertion_constant(self) -> float:
        return (sum(self.vertex_del) + sum(self.vertex_ins)
                + sum(self.edge_del) + sum(self.edge_ins))


def _check_directedness(g1: AttributedGraph, g2: AttributedGraph, directed: bool, name: str) -> None:
    if g1.directed != g2.directed:
        raise FormulationError(f"{name}: cannot compare a directed with an undirected graph")
    if g1.directed != directed:
        wanted = "directed" if directed else "undirected"
        raise FormulationError(f"{name} needs {wanted} graphs")


def _substitution_variables(builder: ModelBuilder, g1, g2, costs: _PairCosts, reduced: bool):
    """Add x then y variables; reduced costs subtract the deletion and insertion they replace."""
    n1, n2 = g1.num_vertices, g2.num_vertices
    x = [[0] * n2 for _ in range(n1)]
    for p in range(n1):
        for q in range(n2):
            cost = costs.vertex_sub[p][q]
            if reduced:
                cost -= costs.vertex_del[p] + costs.vertex_ins[q]
            x[p][q] = builder.add_variable(f"x_{p}_{q}", "x", cost)
    m1, m2 = g1.num_edges, g2.num_edges
    y = [[0] * m2 for _ in range(m1)]
    for a in range(m1):
        for b in range(m2):
            cost = costs.edge_sub[a][b]
            if reduced:
                cost -= costs.edge_del[a] + costs.edge_ins[b]
            y[a][b] = builder.add_variable(f"y_{a}_{b}", "y", cost)
    return x, y


def _vertex_pos(graph: AttributedGraph) -> Callable[[str], int]:
    return graph.vertex_index.__getitem__


def _loop_caps(builder: ModelBuilder, g1, g2, x, y) -> None:
    """Pairwise caps y <= x for undirected pairs involving a loop."""
    pos1, pos2 = _vertex_pos(g1), _vertex_pos(g2)
    for a, e1 in enumerate(g1.edges):
        for b, e2 in enumerate(g2.edges):
            if not (e1.is_loop or e2.is_loop):
                continue
            i, j = pos1(e1.head), pos1(e1.tail)
            k, l = pos2(e2.head), pos2(e2.tail)
            builder.add_constraint(f"loopcap_{a}_{b}_0", [(y[a][b], 1.0), (x[i][k], -1.0)], LESS_EQUAL, 0.0)
            if (j, l) != (i, k):
                builder.add_constraint(f"loopcap_{a}_{b}_1", [(y[a][b], 1.0), (x[j][l], -1.0)], LESS_EQUAL, 0.0)


def _parallel_edge_caps(builder: ModelBuilder, g1, g2, y) -> None:
    """Each edge is substituted at most once; only implied for simple graphs."""
    if not (g1.has_parallel_edges or g2.has_parallel_edges):
        return
    m1, m2 = g1.num_edges, g2.num_edges
    for a in range(m1):
        builder.add_constraint(f"ecap_src_{a}", [(y[a][b], 1.0) for b in range(m2)], LESS_EQUAL, 1.0)
    for b in range(m2):
        builder.add_constraint(f"ecap_tgt_{b}", [(y[a][b], 1.0) for a in range(m1)], LESS_EQUAL, 1.0)


def _vertex_assignment_rows(builder: ModelBuilder, n1: int, n2: int, x) -> None:
    for p in range(n1):
        builder.add_constraint(f"vsrc_{p}", [(x[p][q], 1.0) for q in range(n2)], LESS_EQUAL, 1.0)
    for q in range(n2):
        builder.add_constraint(f"vtgt_{q}", [(x[p][q], 1.0) for p in range(n1)], LESS_EQUAL, 1.0)


def build_f1(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> BlpModel:
    """
    Build the F1 program with explicit deletion and insertion variables.

    Directed graphs use y <= x(head, head) and y <= x(tail, tail). Undirected
    graphs use y <= x(i,k) + x(j,k) and y <= x(i,l) + x(j,l), plus pairwise
    caps for loops.

    Args:
        g1: Source graph
        g2: Target graph
        cost_model: Edit costs

    Returns:
        BlpModel with |V1|+|V2|+|E1|+|E2|+|V1||V2|+|E1||E2| variables and
        |V1|+|V2|+|E1|+|E2|+2|E1||E2| constraints (plus loop caps)

    Raises:
        FormulationError: If the graphs differ in directedness
    """
    if g1.directed != g2.directed:
        raise FormulationError("f1: cannot compare a directed with an undirected graph")
    costs = _PairCosts(g1, g2, cost_model)
    n1, n2, m1, m2 = g1.num_vertices, g2.num_vertices, g1.num_edges, g2.num_edges
    builder = ModelBuilder("f1")
    x, y = _substitution_variables(builder, g1, g2, costs, reduced=False)
    u = [builder.add_variable(f"u_{p}", "u", costs.vertex_del[p]) for p in range(n1)]
    v = [builder.add_variable(f"v_{q}", "v", costs.vertex_ins[q]) for q in range(n2)]
    e = [builder.add_variable(f"e_{a}", "e", costs.edge_del[a]) for a in range(m1)]
    f = [builder.add_variable(f"f_{b}", "f", costs.edge_ins[b]) for b in range(m2)]

    for p in range(n1):
        builder.add_constraint(f"vsrc_{p}", [(x[p][q], 1.0) for q in range(n2)] + [(u[p], 1.0)], EQUAL, 1.0)
    for q in range(n2):
        builder.add_constraint(f"vtgt_{q}", [(x[p][q], 1.0) for p in range(n1)] + [(v[q], 1.0)], EQUAL, 1.0)
    for a in range(m1):
        builder.add_constraint(f"esrc_{a}", [(y[a][b], 1.0) for b in range(m2)] + [(e[a], 1.0)], EQUAL, 1.0)
    for b in range(m2):
        builder.add_constraint(f"etgt_{b}", [(y[a][b], 1.0) for a in range(m1)] + [(f[b], 1.0)], EQUAL, 1.0)

    pos1, pos2 = _vertex_pos(g1), _vertex_pos(g2)
    for a, e1 in enumerate(g1.edges):
        i, j = pos1(e1.head), pos1(e1.tail)
        for b, e2 in enumerate(g2.edges):
            k, l = pos2(e2.head), pos2(e2.tail)
            if g1.directed:
                builder.add_constraint(f"head_{a}_{b}", [(y[a][b], 1.0), (x[i][k], -1.0)], LESS_EQUAL, 0.0)
                builder.add_constraint(f"tail_{a}_{b}", [(y[a][b], 1.0), (x[j][l], -1.0)], LESS_EQUAL, 0.0)
            else:
                builder.add_constraint(
                    f"head_{a}_{b}", [(y[a][b], 1.0), (x[i][k], -1.0), (x[j][k], -1.0)], LESS_EQUAL, 0.0
                )
                builder.add_constraint(
                    f"tail_{a}_{b}", [(y[a][b], 1.0), (x[i][l], -1.0), (x[j][l], -1.0)], LESS_EQUAL, 0.0
                )
    if not g1.directed:
        _loop_caps(builder, g1, g2, x, y)
    return builder.build((n1, n2, m1, m2))


def build_f2(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> BlpModel:
    """
    Build the reduced F2 program over substitution variables only.

    The objective holds (c_sub - c_del - c_ins) coefficients and the constant
    C = sum of all deletion and insertion costs. For each k in V2 and ij in
    E1, at most one edge leaving k is matched to ij, and only if i maps to k;
    symmetrically for edges entering l.

    Returns:
        BlpModel with |V1||V2|+|E1||E2| variables and |V1|+|V2|+2|V2||E1|
        constraints (plus edge caps for multigraphs)

    Raises:
        FormulationError: If the graphs are not both directed
    """
    _check_directedness(g1, g2, True, "f2")
    costs = _PairCosts(g1, g2, cost_model)
    n1, n2, m1, m2 = g1.num_vertices, g2.num_vertices, g1.num_edges, g2.num_edges
    builder = ModelBuilder("f2")
    builder.constant = costs.deletion_insertion_constant()
    x, y = _substitution_variables(builder, g1, g2, costs, reduced=True)
    _vertex_assignment_rows(builder, n1, n2, x)

    pos1 = _vertex_pos(g1)
    for a, e1 in enumerate(g1.edges):
        i, j = pos1(e1.head), pos1(e1.tail)
        for q, k in enumerate(g2.vertex_ids):
            terms = [(y[a][b], 1.0) for b in g2.out_edges[k]] + [(x[i][q], -1.0)]
            builder.add_constraint(f"topo_out_{a}_{q}", terms, LESS_EQUAL, 0.0)
        for q, l in enumerate(g2.vertex_ids):
            terms = [(y[a][b], 1.0) for b in g2.in_edges[l]] + [(x[j][q], -1.0)]
            builder.add_constraint(f"topo_in_{a}_{q}", terms, LESS_EQUAL, 0.0)
    _parallel_edge_caps(builder, g1, g2, y)
    return builder.build((n1, n2, m1, m2))


def build_f2_alt(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> BlpModel:
    """
    Build F2 with topology rows indexed by (V1, E2) instead of (V2, E1).

    For each i in V1 and kl in E2, at most one edge leaving i is matched to
    kl, and only if i maps to k; symmetrically for edges entering j.

    Returns:
        BlpModel with |V1||V2|+|E1||E2| variables and |V1|+|V2|+2|V1||E2|
        constraints (plus edge caps for multigraphs)
    """
    _check_directedness(g1, g2, True, "f2_alt")
    costs = _PairCosts(g1, g2, cost_model)
    n1, n2, m1, m2 = g1.num_vertices, g2.num_vertices, g1.num_edges, g2.num_edges
    builder = ModelBuilder("f2_alt")
    builder.constant = costs.deletion_insertion_constant()
    x, y = _substitution_variables(builder, g1, g2, costs, reduced=True)
    _vertex_assignment_rows(builder, n1, n2, x)

    pos2 = _vertex_pos(g2)
    for b, e2 in enumerate(g2.edges):
        k, l = pos2(e2.head), pos2(e2.tail)
        for p, i in enumerate(g1.vertex_ids):
            terms = [(y[a][b], 1.0) for a in g1.out_edges[i]] + [(x[p][k], -1.0)]
            builder.add_constraint(f"topo_out_{b}_{p}", terms, LESS_EQUAL, 0.0)
        for p, j in enumerate(g1.vertex_ids):
            terms = [(y[a][b], 1.0) for a in g1.in_edges[j]] + [(x[p][l], -1.0)]
            builder.add_constraint(f"topo_in_{b}_{p}", terms, LESS_EQUAL, 0.0)
    _parallel_edge_caps(builder, g1, g2, y)
    return builder.build((n1, n2, m1, m2))


def build_f2u(g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> BlpModel:
    """
    Build the undirected F2u program.

    For each k in V2 and ij in E1, the edges incident to k matched to ij sum
    to at most x(i,k) + x(j,k). Pairs involving a loop also get the caps
    y <= x(i,k) and y <= x(j,l).

    Returns:
        BlpModel with |V1||V2|+|E1||E2| variables and |V1|+|V2|+|V2||E1|
        constraints (plus loop and multigraph caps)

    Raises:
        FormulationError: If the graphs are not both undirected
    """
    _check_directedness(g1, g2, False, "f2u")
    costs = _PairCosts(g1, g2, cost_model)
    n1, n2, m1, m2 = g1.num_vertices, g2.num_vertices, g1.num_edges, g2.num_edges
    builder = ModelBuilder("f2u")
    builder.constant = costs.deletion_insertion_constant()
    x, y = _substitution_variables(builder, g1, g2, costs, reduced=True)
    _vertex_assignment_rows(builder, n1, n2, x)

    pos1 = _vertex_pos(g1)
    for a, e1 in enumerate(g1.edges):
        i, j = pos1(e1.head), pos1(e1.tail)
        for q, k in enumerate(g2.vertex_ids):
            terms = [(y[a][b], 1.0) for b in g2.incident_edges[k]] + [(x[i][q], -1.0), (x[j][q], -1.0)]
            builder.add_constraint(f"topo_{a}_{q}", terms, LESS_EQUAL, 0.0)
    _loop_caps(builder, g1, g2, x, y)
    _parallel_edge_caps(builder, g1, g2, y)
    return builder.build((n1, n2, m1, m2))


BUILDERS: Dict[str, Callable[[AttributedGraph, AttributedGraph, CostModel], BlpModel]] = {
    "f1": build_f1,
    "f2": build_f2,
    "f2_alt": build_f2_alt,
    "f2u": build_f2u,
}


def choose_formulation(g1: AttributedGraph, g2: AttributedGraph) -> str:
    """
    Pick the smallest F2 variant for a graph pair.

    Undirected pairs use f2u. Directed pairs use f2 when |V2||E1| <= |V1||E2|
    and f2_alt otherwise.
    """
    if g1.directed != g2.directed:
        raise FormulationError("cannot compare a directed with an undirected graph")
    if not g1.directed:
        return "f2u"
    if g2.num_vertices * g1.num_edges <= g1.num_vertices * g2.num_edges:
        return "f2"
    return "f2_alt"


def build_model(formulation: str, g1: AttributedGraph, g2: AttributedGraph, cost_model: CostModel) -> BlpModel:
    """
    Build a formulation by name ('f1', 'f2', 'f2_alt', 'f2u' or 'auto').

    Raises:
        FormulationError: On unknown names or directedness mismatch
    """
    name = formulation.lower().replace("-", "_")
    if name == "f2alt":
        name = "f2_alt"
    if name == "auto":
        name = choose_formulation(g1, g2)
    if name not in BUILDERS:
        raise FormulationError(f"Unknown formulation '{formulation}'. Available: auto, {', '.join(BUILDERS)}")
    return BUILDERS[name](g1, g2, cost_model)
