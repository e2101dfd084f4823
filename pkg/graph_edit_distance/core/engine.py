"""Main distance engine orchestrator."""

import logging
from typing import Dict, Iterable, Optional

from graph_edit_distance.bench.report import ReportGenerator
from graph_edit_distance.core.exceptions import GraphEditDistanceError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.costs.base import CostModel
from graph_edit_distance.data.ingester import GraphIngester, load_graph
from graph_edit_distance.data.validator import GraphValidator
from graph_edit_distance.methods.base import MethodOptions, MethodOutcome
from graph_edit_distance.methods.registry import MethodRegistry

logger = logging.getLogger(__name__)


class EditDistanceEngine:
    """
    Main orchestrator for comparing two graphs.

    Coordinates graph loading, validation against the cost model's
    attribute keys, method execution and report generation.
    """

    def __init__(
        self,
        cost_model: CostModel,
        method_registry: Optional[MethodRegistry] = None,
        options: Optional[MethodOptions] = None,
        ingester: Optional[GraphIngester] = None,
    ):
        """
        Initialize the engine.

        Args:
            cost_model: Cost model used by every method
            method_registry: Registry of distance methods (defaults to the built-in methods)
            options: Per-pair settings
            ingester: Graph ingester (defaults to dispatch by file extension)
        """
        self.cost_model = cost_model
        self.method_registry = method_registry or MethodRegistry()
        self.options = options or MethodOptions()
        self.ingester = ingester
        self.validator = GraphValidator(
            required_vertex_keys=cost_model.required_vertex_keys(),
            required_edge_keys=cost_model.required_edge_keys(),
        )
        self.report_generator = ReportGenerator()

    def load(self, source: str) -> AttributedGraph:
        """
        Load and validate a graph file.

        Raises:
            GraphFormatError: If the file cannot be parsed
            GraphValidationError: If the graph lacks attributes the cost model needs
        """
        graph = self.ingester.ingest(source) if self.ingester else load_graph(source)
        self.validator.validate(graph)
        return graph

    def compare(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        methods: Iterable[str],
    ) -> Dict[str, MethodOutcome]:
        """
        Run several methods on a graph pair.

        Args:
            g1: Source graph
            g2: Target graph
            methods: Method names, run in order

        Returns:
            Method name -> outcome

        Raises:
            GraphEditDistanceError: If a method is unknown or fails
        """
        outcomes: Dict[str, MethodOutcome] = {}
        for name in methods:
            method = self.method_registry.get(name)
            try:
                outcomes[name] = method.compute(g1, g2, self.cost_model, self.options)
            except GraphEditDistanceError:
                logger.error("event=method_failed method=%s pair=%s/%s", name, g1.graph_id, g2.graph_id)
                raise
            logger.info(
                "event=compared method=%s distance=%.6g status=%s seconds=%.4f",
                name, outcomes[name].distance, outcomes[name].status.value, outcomes[name].seconds,
            )
        return outcomes

    def generate_report(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        outcomes: Dict[str, MethodOutcome],
    ) -> str:
        """
        Generate a formatted comparison report.
        """
        return self.report_generator.generate_comparison(g1, g2, outcomes)

    def compare_and_report(self, source_1: str, source_2: str, methods: Iterable[str]) -> str:
        """
        Load two graph files, compare them and generate a report.

        Convenience method that combines load(), compare() and generate_report().
        """
        g1 = self.load(source_1)
        g2 = self.load(source_2)
        return self.generate_report(g1, g2, self.compare(g1, g2, methods))
