"""Dataset-specific cost models (GREC, MUTA, PROT, ILPISO) and configurable custom costs."""

import math
from typing import Any, Dict, List, Mapping

from graph_edit_distance.core.exceptions import CostModelError
from graph_edit_distance.core.graph import AttributeMap
from graph_edit_distance.costs.base import CostParams, WeightedCostModel
from graph_edit_distance.costs.string_distance import string_edit_distance


class GrecCostModel(WeightedCostModel):
    """
    Costs for line drawings of electronic and architectural symbols.

    Vertices of equal type are compared by the Euclidean distance of their
    (x, y) positions; different types cost 2 * tau_vertex. Edges cost 0 on
    equal type and 2 * tau_edge otherwise.
    """

    model_name = "grec"
    defaults = (90.0, 15.0, 0.5)
    vertex_bindings = {"x": "x", "y": "y", "vertex_type": "type"}
    edge_bindings = {"edge_type": "type0"}

    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.lookup(a, "vertex_type") != self.lookup(b, "vertex_type"):
            return 2.0 * self.tau_vertex
        return math.hypot(self.number(a, "x") - self.number(b, "x"), self.number(a, "y") - self.number(b, "y"))

    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.lookup(a, "edge_type") == self.lookup(b, "edge_type"):
            return 0.0
        return 2.0 * self.tau_edge


class MutaCostModel(WeightedCostModel):
    """
    Costs for molecules tested for mutagenicity.

    Vertices cost 0 on equal chemical symbol and 2 * tau_vertex otherwise;
    edge substitutions are free. tau_edge still prices edge deletion and
    insertion.
    """

    model_name = "muta"
    defaults = (11.0, 1.1, 0.25)
    vertex_bindings = {"symbol": "chem"}
    edge_bindings: Dict[str, str] = {}

    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.lookup(a, "symbol") == self.lookup(b, "symbol"):
            return 0.0
        return 2.0 * self.tau_vertex

    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return 0.0


class ProtCostModel(WeightedCostModel):
    """
    Costs for protein secondary-structure graphs.

    Vertices of equal type are compared by the string edit distance of their
    amino acid sequences; a type mismatch is priced as a deletion plus an
    insertion. Edges cost 0 on equal type and 2 * tau_edge otherwise; the
    distance part of the edge label is ignored.
    """

    model_name = "prot"
    defaults = (11.0, 1.0, 0.75)
    vertex_bindings = {"vertex_type": "type", "sequence": "sequence"}
    edge_bindings = {"edge_type": "type0"}

    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.lookup(a, "vertex_type") != self.lookup(b, "vertex_type"):
            return 2.0 * self.tau_vertex
        return float(string_edit_distance(str(self.lookup(a, "sequence")), str(self.lookup(b, "sequence"))))

    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.lookup(a, "edge_type") == self.lookup(b, "edge_type"):
            return 0.0
        return 2.0 * self.tau_edge


class IlpisoCostModel(WeightedCostModel):
    """
    Costs for the synthetic subgraph-isomorphism benchmark graphs.

    Vertex and edge substitutions cost the absolute difference of their
    scalar labels; deletions and insertions are fixed at 66.6.
    """

    model_name = "ilpiso"
    defaults = (66.6, 66.6, 0.5)
    vertex_bindings = {"vertex_label": "label"}
    edge_bindings = {"edge_label": "label"}

    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return abs(self.number(a, "vertex_label") - self.number(b, "vertex_label"))

    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return abs(self.number(a, "edge_label") - self.number(b, "edge_label"))


_METRICS = ("dirac", "l1", "euclidean", "levenshtein", "zero")


class _Metric:
    """Substitution metric over a list of attribute keys, built from a config block."""

    def __init__(self, owner: str, block: Mapping[str, Any], tau: float):
        metric = str(block.get("metric", "dirac")).lower()
        if metric not in _METRICS:
            raise CostModelError(f"custom {owner} metric '{metric}' unknown; choose from {', '.join(_METRICS)}")
        keys = block.get("keys", [])
        if isinstance(keys, str):
            keys = [keys]
        if metric != "zero" and not keys:
            raise CostModelError(f"custom {owner} metric '{metric}' needs at least one attribute key")
        if metric == "levenshtein" and len(keys) != 1:
            raise CostModelError(f"custom {owner} levenshtein metric takes exactly one key")
        self.owner = owner
        self.metric = metric
        self.keys: List[str] = [str(k) for k in keys]
        self.penalty = float(block.get("penalty", 2.0)) * tau
        self.scale = float(block.get("scale", 1.0))

    def _get(self, attrs: AttributeMap, key: str):
        try:
            return attrs[key]
        except KeyError:
            raise CostModelError(f"custom cost model: {self.owner} attribute '{key}' missing")

    def _numbers(self, attrs: AttributeMap) -> List[float]:
        values = []
        for key in self.keys:
            value = self._get(attrs, key)
            try:
                values.append(float(value))
            except (TypeError, ValueError):
                raise CostModelError(f"custom cost model: {self.owner} attribute '{key}' is not numeric")
        return values

    def __call__(self, a: AttributeMap, b: AttributeMap) -> float:
        if self.metric == "zero":
            return 0.0
        if self.metric == "dirac":
            same = all(self._get(a, k) == self._get(b, k) for k in self.keys)
            return 0.0 if same else self.penalty
        if self.metric == "levenshtein":
            key = self.keys[0]
            return self.scale * string_edit_distance(str(self._get(a, key)), str(self._get(b, key)))
        xs, ys = self._numbers(a), self._numbers(b)
        if self.metric == "l1":
            return self.scale * sum(abs(x - y) for x, y in zip(xs, ys))
        return self.scale * math.sqrt(sum((x - y) ** 2 for x, y in zip(xs, ys)))


class CustomCostModel(WeightedCostModel):
    """
    Cost model configured entirely from a config file.

    The 'vertex' and 'edge' blocks choose a substitution metric (dirac, l1,
    euclidean, levenshtein or zero), the attribute keys it reads, a Dirac
    penalty as a multiple of tau and a scale for the distance metrics.
    """

    model_name = "custom"

    def __init__(self, params: CostParams):
        super().__init__(params)
        self._vertex_metric = _Metric("vertex", params.vertex, self.tau_vertex)
        self._edge_metric = _Metric("edge", params.edge or {"metric": "zero"}, self.tau_edge)

    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return self._vertex_metric(a, b)

    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return self._edge_metric(a, b)

    def required_vertex_keys(self) -> List[str]:
        return list(self._vertex_metric.keys)

    def required_edge_keys(self) -> List[str]:
        return list(self._edge_metric.keys)
