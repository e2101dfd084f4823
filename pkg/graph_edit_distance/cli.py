"""Command line interface: ged compute | bench | validate | export-lp | generate."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from graph_edit_distance import __version__
from graph_edit_distance.bench.runner import BenchmarkConfig, run_benchmark
from graph_edit_distance.core.edit_path import describe_path
from graph_edit_distance.core.engine import EditDistanceEngine
from graph_edit_distance.core.exceptions import GraphEditDistanceError
from graph_edit_distance.costs.config import load_cost_params
from graph_edit_distance.costs.factory import make_cost_model
from graph_edit_distance.data.dataset import subsets_by_vertex_count
from graph_edit_distance.data.ingester import load_graph, save_graph
from graph_edit_distance.data.synthetic import generate_random_dataset
from graph_edit_distance.data.validator import GraphValidator, validate
from graph_edit_distance.formulations.builders import build_model, choose_formulation
from graph_edit_distance.formulations.lp_format import write_lp
from graph_edit_distance.formulations.model import relax
from graph_edit_distance.methods.base import MethodOptions
from graph_edit_distance.methods.registry import MethodRegistry

logger = logging.getLogger(__name__)


def _method_names(values: Optional[List[str]]) -> List[str]:
    names: List[str] = []
    for value in values or ["auto"]:
        names.extend(part.strip() for part in value.split(",") if part.strip())
    return names


def _cmd_compute(args: argparse.Namespace) -> int:
    cost_model = make_cost_model(load_cost_params(args.cost))
    options = MethodOptions(
        time_limit=args.time_limit,
        beam_width=args.beam_width,
        astar_memory_limit=args.memory_limit,
        seed_incumbent=not args.no_seed,
    )
    engine = EditDistanceEngine(cost_model, options=options)
    g1 = engine.load(args.g1)
    g2 = engine.load(args.g2)

    methods = _method_names(args.method)
    if methods == ["auto"]:
        methods = [choose_formulation(g1, g2)]
    outcomes = engine.compare(g1, g2, methods)

    if args.json:
        print(json.dumps({name: outcome.to_dict() for name, outcome in outcomes.items()}, indent=2))
        return 0
    print(engine.generate_report(g1, g2, outcomes))
    if args.show_path:
        for name, outcome in outcomes.items():
            if outcome.path is not None:
                print(f"\n[{name}]")
                print(describe_path(outcome.path, g1, g2))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    config = BenchmarkConfig.load(args.config)
    report = run_benchmark(config, args.out)
    print(report.scores.to_string(index=False, float_format="%.4f"))
    print(f"\nArtifacts written to {args.out}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    validator = None
    if args.cost:
        cost_model = make_cost_model(load_cost_params(args.cost))
        validator = GraphValidator(cost_model.required_vertex_keys(), cost_model.required_edge_keys())
    failures = 0
    for source in args.graph:
        graph = load_graph(source)
        found = validator.violations(graph) if validator else validate(graph)
        if found:
            failures += 1
            print(f"{source}: {len(found)} violation(s)")
            for violation in found:
                print(f"  {violation.kind}: {violation.message}")
        else:
            kind = "directed" if graph.directed else "undirected"
            print(f"{source}: ok ({graph.num_vertices} vertices, {graph.num_edges} edges, {kind})")
    return 1 if failures else 0


def _cmd_export_lp(args: argparse.Namespace) -> int:
    cost_model = make_cost_model(load_cost_params(args.cost))
    g1 = load_graph(args.g1)
    g2 = load_graph(args.g2)
    model = build_model(args.formulation, g1, g2, cost_model)
    if args.relax:
        model = relax(model)
    text = write_lp(model)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"Wrote {model.num_variables} variables and {model.num_constraints} constraints to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    graphs = generate_random_dataset(
        args.sizes, args.per_size, args.edge_probability, args.seed, args.directed, args.label_range
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for graph in graphs:
        save_graph(graph, str(out / f"{graph.graph_id}.{args.format}"))
    counts = ", ".join(f"{size}: {len(group)}" for size, group in subsets_by_vertex_count(graphs).items())
    print(f"Wrote {len(graphs)} graphs to {out} ({counts})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ged",
        description="Exact graph edit distance, LP lower bounds and heuristic baselines",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for solver progress, -vv for debug")
    sub = parser.add_subparsers(dest="command", required=True)

    method_names = ", ".join(MethodRegistry().names())
    compute = sub.add_parser("compute", help="compare two graphs")
    compute.add_argument("--g1", required=True, help="source graph file (.gxl or .txt)")
    compute.add_argument("--g2", required=True, help="target graph file")
    compute.add_argument("--method", action="append", help=f"method(s), repeat or comma-separate: {method_names}")
    compute.add_argument("--cost", default="grec", help="cost config JSON or built-in model name")
    compute.add_argument("--time-limit", type=float, default=300.0, help="seconds per method")
    compute.add_argument("--beam-width", type=int, default=10)
    compute.add_argument("--memory-limit", type=int, default=1_000_000, help="largest A* open list")
    compute.add_argument("--no-seed", action="store_true", help="do not seed branch-and-bound with the BP path")
    compute.add_argument("--show-path", action="store_true", help="print the edit paths")
    compute.add_argument("--json", action="store_true", help="print outcomes as JSON")
    compute.set_defaults(handler=_cmd_compute)

    bench = sub.add_parser("bench", help="run a benchmark")
    bench.add_argument("--config", required=True, help="benchmark config JSON")
    bench.add_argument("--out", required=True, help="output directory")
    bench.set_defaults(handler=_cmd_bench)

    check = sub.add_parser("validate", help="check graph files")
    check.add_argument("--graph", required=True, nargs="+", help="graph file(s)")
    check.add_argument("--cost", help="also require the attribute keys of this cost model")
    check.set_defaults(handler=_cmd_validate)

    export = sub.add_parser("export-lp", help="write a formulation in LP format")
    export.add_argument("--g1", required=True)
    export.add_argument("--g2", required=True)
    export.add_argument("--formulation", default="auto", help="f1, f2, f2_alt, f2u or auto")
    export.add_argument("--cost", default="grec")
    export.add_argument("--relax", action="store_true", help="export the continuous relaxation")
    export.add_argument("--out", help="output file (stdout when omitted)")
    export.set_defaults(handler=_cmd_export_lp)

    generate = sub.add_parser("generate", help="write a synthetic labelled dataset")
    generate.add_argument("--out", required=True, help="output directory")
    generate.add_argument("--sizes", type=int, nargs="+", default=[5, 10], help="vertex counts")
    generate.add_argument("--per-size", type=int, default=10, help="graphs per vertex count")
    generate.add_argument("--edge-probability", type=float, default=0.3)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--directed", action="store_true")
    generate.add_argument("--label-range", type=int, default=100)
    generate.add_argument("--format", choices=["gxl", "txt"], default="gxl")
    generate.set_defaults(handler=_cmd_generate)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point.

    Returns:
        Exit code: 0 on success, 1 on a toolkit error or failed validation
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except GraphEditDistanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
