"""Report generation."""

from datetime import datetime
from typing import TYPE_CHECKING, Mapping

import pandas as pd

from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.methods.base import MethodOutcome

if TYPE_CHECKING:
    from graph_edit_distance.bench.runner import MetricsReport


class ReportGenerator:
    """
    Generates plain-text reports of benchmark runs and single comparisons.
    """

    def generate(self, report: "MetricsReport", title: str = "Graph edit distance benchmark") -> str:
        """
        Generate a benchmark report.

        Args:
            report: Metrics of a benchmark run
            title: Report title

        Returns:
            Formatted report as string
        """
        sections = [
            self._generate_header(title),
            self._generate_summary(report),
            self._generate_scores(report),
            self._generate_subsets(report),
            self._generate_footer(),
        ]
        return "\n\n".join(sections)

    def generate_comparison(
        self,
        g1: AttributedGraph,
        g2: AttributedGraph,
        outcomes: Mapping[str, MethodOutcome],
    ) -> str:
        """
        Generate a report of several methods on one graph pair.

        Args:
            g1: Source graph
            g2: Target graph
            outcomes: Method name -> outcome

        Returns:
            Formatted report as string
        """
        frame = pd.DataFrame(
            [
                (name, outcome.distance, outcome.status.value,
                 outcome.best_bound if outcome.best_bound is not None else float("nan"), outcome.seconds)
                for name, outcome in outcomes.items()
            ],
            columns=["method", "distance", "status", "best_bound", "seconds"],
        )
        lines = [
            self._generate_header(f"{g1.graph_id or 'G1'} vs {g2.graph_id or 'G2'}"),
            f"G1: |V|={g1.num_vertices} |E|={g1.num_edges}  G2: |V|={g2.num_vertices} |E|={g2.num_edges}  "
            f"{'directed' if g1.directed else 'undirected'}",
            "",
            frame.to_string(index=False) if not frame.empty else "No methods were run.",
        ]
        return "\n".join(lines)

    def _generate_header(self, title: str) -> str:
        """Generate report header."""
        return f"""{'=' * 60}
{title.upper()}
Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}
{'=' * 60}"""

    def _generate_summary(self, report: "MetricsReport") -> str:
        config = report.config
        pairs = sum(len(next(iter(by_method.values())).graph_ids) ** 2 for by_method in report.matrices.values())
        lines = [
            "## Summary",
            "",
            f"Dataset:      {config.dataset} ({config.pattern})",
            f"Subsets:      {', '.join(str(size) for size in report.matrices)} vertices",
            f"Methods:      {', '.join(config.methods)}",
            f"Pairs:        {pairs} per method",
            f"Time limit:   {config.time_limit:g} s per pair",
        ]
        flagged = report.flagged_cells()
        flagged = flagged[flagged["flagged_cells"] > 0]
        if flagged.empty:
            lines.append("All cells finished within their limits.")
        else:
            lines.append("Cells stopped by a limit:")
            for row in flagged.itertuples(index=False):
                lines.append(f"- subset {row.subset}, {row.method}: {row.flagged_cells}")
        return "\n".join(lines)

    def _generate_scores(self, report: "MetricsReport") -> str:
        table = report.scores.sort_values(["deviation_score", "method"]).to_string(index=False, float_format="%.4f")
        return "## Scores (0 = best deviation / fastest)\n\n" + table

    def _generate_subsets(self, report: "MetricsReport") -> str:
        sections = ["## Per-subset deviations"]
        for size, frame in report.deviations.groupby("subset", sort=False):
            sections.append("")
            sections.append(f"### {size} vertices")
            sections.append(
                frame.drop(columns="subset").to_string(index=False, float_format="%.4f")
            )
        return "\n".join(sections)

    def _generate_footer(self) -> str:
        """Generate report footer."""
        return f"""{'=' * 60}
Deviation is |M - R| / R against the best distance any exact or
upper-bounding method found; lower bounds are excluded from R.
{'=' * 60}"""
