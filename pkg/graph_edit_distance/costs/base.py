"""Base edit cost model interface."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar, Dict, List, Mapping, Optional, Tuple

from graph_edit_distance.core.exceptions import CostModelError
from graph_edit_distance.core.graph import AttributeMap, AttributeValue


@dataclass(frozen=True)
class CostParams:
    """
    Metaparameters of a cost model.

    Attributes:
        model: Cost model name (grec, muta, prot, ilpiso, custom, ...)
        tau_vertex: Vertex deletion/insertion cost before weighting
        tau_edge: Edge deletion/insertion cost before weighting
        alpha: Weight of vertex operations; edge operations get 1 - alpha
        keys: Binding name -> attribute key overrides
        vertex: Substitution metric block of custom models
        edge: Substitution metric block of custom models
    """
    model: str
    tau_vertex: float
    tau_edge: float
    alpha: float = 0.5
    keys: Dict[str, str] = field(default_factory=dict)
    vertex: Dict[str, Any] = field(default_factory=dict)
    edge: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("tau_vertex", "tau_edge", "alpha"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise CostModelError(f"{name} must be a finite number, got {value!r}")
        if self.tau_vertex < 0 or self.tau_edge < 0:
            raise CostModelError("tau_vertex and tau_edge must be nonnegative")
        if not 0.0 <= self.alpha <= 1.0:
            raise CostModelError(f"alpha must lie in [0, 1], got {self.alpha}")

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "model": self.model,
            "tau_vertex": self.tau_vertex,
            "tau_edge": self.tau_edge,
            "alpha": self.alpha,
        }
        if self.keys:
            result["keys"] = dict(self.keys)
        if self.vertex:
            result["vertex"] = dict(self.vertex)
        if self.edge:
            result["edge"] = dict(self.edge)
        return result


class CostModel(ABC):
    """
    Abstract base class for the six elementary edit cost functions.

    All costs are nonnegative reals. Implementations must be pure so that
    a model can be shared by concurrent computations.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the cost model name."""
        pass

    @abstractmethod
    def vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        """Cost of substituting a vertex labelled a by a vertex labelled b."""
        pass

    @abstractmethod
    def vertex_del(self, a: AttributeMap) -> float:
        pass

    @abstractmethod
    def vertex_ins(self, a: AttributeMap) -> float:
        pass

    @abstractmethod
    def edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        """Cost of substituting an edge labelled a by an edge labelled b."""
        pass

    @abstractmethod
    def edge_del(self, a: AttributeMap) -> float:
        pass

    @abstractmethod
    def edge_ins(self, a: AttributeMap) -> float:
        pass

    def required_vertex_keys(self) -> List[str]:
        """Attribute keys every vertex must carry for this model."""
        return []

    def required_edge_keys(self) -> List[str]:
        """Attribute keys every edge must carry for this model."""
        return []


class WeightedCostModel(CostModel):
    """
    Cost model parameterized by (tau_vertex, tau_edge, alpha).

    Subclasses provide raw substitution costs; deletions and insertions
    cost tau. Every vertex-operation cost is multiplied by alpha and every
    edge-operation cost by 1 - alpha.
    """

    # (tau_vertex, tau_edge, alpha) used when a config names only the model
    defaults: ClassVar[Tuple[float, float, float]] = (1.0, 1.0, 0.5)
    # binding name -> default attribute key
    vertex_bindings: ClassVar[Dict[str, str]] = {}
    edge_bindings: ClassVar[Dict[str, str]] = {}

    def __init__(self, params: Optional[CostParams] = None):
        """
        Initialize cost model.

        Args:
            params: Metaparameters; the table defaults of the model when None
        """
        if params is None:
            params = self.default_params()
        self.params = params
        self.alpha = float(params.alpha)
        self.tau_vertex = float(params.tau_vertex)
        self.tau_edge = float(params.tau_edge)
        unknown = set(params.keys) - set(self.vertex_bindings) - set(self.edge_bindings)
        if unknown:
            raise CostModelError(
                f"Unknown key binding(s) for model '{self.name}': {', '.join(sorted(unknown))}"
            )
        self._keys = {**self.vertex_bindings, **self.edge_bindings, **params.keys}

    @classmethod
    def default_params(cls) -> CostParams:
        tau_vertex, tau_edge, alpha = cls.defaults
        return CostParams(cls.model_name, tau_vertex, tau_edge, alpha)

    model_name: ClassVar[str] = "weighted"

    @property
    def name(self) -> str:
        return self.model_name

    def key(self, binding: str) -> str:
        """Attribute key bound to a binding name."""
        return self._keys[binding]

    def lookup(self, attrs: Mapping[str, AttributeValue], binding: str) -> AttributeValue:
        """
        Read the attribute bound to a binding name.

        Raises:
            CostModelError: If the attribute is missing
        """
        key = self._keys[binding]
        try:
            return attrs[key]
        except KeyError:
            raise CostModelError(f"{self.name} cost model: missing attribute '{key}'")

    def number(self, attrs: Mapping[str, AttributeValue], binding: str) -> float:
        value = self.lookup(attrs, binding)
        try:
            return float(value)
        except (TypeError, ValueError):
            raise CostModelError(
                f"{self.name} cost model: attribute '{self.key(binding)}' is not numeric ({value!r})"
            )

    def required_vertex_keys(self) -> List[str]:
        return [self._keys[b] for b in self.vertex_bindings]

    def required_edge_keys(self) -> List[str]:
        return [self._keys[b] for b in self.edge_bindings]

    @abstractmethod
    def raw_vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        pass

    @abstractmethod
    def raw_edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        pass

    def vertex_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return self.alpha * self.raw_vertex_sub(a, b)

    def vertex_del(self, a: AttributeMap) -> float:
        return self.alpha * self.tau_vertex

    def vertex_ins(self, a: AttributeMap) -> float:
        return self.alpha * self.tau_vertex

    def edge_sub(self, a: AttributeMap, b: AttributeMap) -> float:
        return (1.0 - self.alpha) * self.raw_edge_sub(a, b)

    def edge_del(self, a: AttributeMap) -> float:
        return (1.0 - self.alpha) * self.tau_edge

    def edge_ins(self, a: AttributeMap) -> float:
        return (1.0 - self.alpha) * self.tau_edge

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(tau_vertex={self.tau_vertex}, tau_edge={self.tau_edge}, "
                f"alpha={self.alpha})")


class FunctionCostModel(CostModel):
    """Cost model assembled from six plain callables, without weighting."""

    def __init__(
        self,
        vertex_sub: Callable[[AttributeMap, AttributeMap], float],
        vertex_del: Callable[[AttributeMap], float],
        vertex_ins: Callable[[AttributeMap], float],
        edge_sub: Callable[[AttributeMap, AttributeMap], float],
        edge_del: Callable[[AttributeMap], float],
        edge_ins: Callable[[AttributeMap], float],
        name: str = "function",
    ):
        self._functions = (vertex_sub, vertex_del, vertex_ins, edge_sub, edge_del, edge_ins)
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    def vertex_sub(self, a, b):
        return float(self._functions[0](a, b))

    def vertex_del(self, a):
        return float(self._functions[1](a))

    def vertex_ins(self, a):
        return float(self._functions[2](a))

    def edge_sub(self, a, b):
        return float(self._functions[3](a, b))

    def edge_del(self, a):
        return float(self._functions[4](a))

    def edge_ins(self, a):
        return float(self._functions[5](a))
