"""Registry for distance methods."""

from typing import Dict, List

from graph_edit_distance.core.exceptions import BenchmarkError
from graph_edit_distance.core.graph import AttributedGraph
from graph_edit_distance.methods.base import GedMethod, MethodRole
from graph_edit_distance.methods.blp import AStarMethod, FormulationMethod
from graph_edit_distance.methods.bounds import (
    BeamMethod,
    BipartiteMethod,
    HausdorffMethod,
    RelaxationMethod,
)


class MethodRegistry:
    """
    Registry for managing distance methods.

    Allows methods to be registered and looked up by name. New methods can
    be added without modifying existing code.
    """

    def __init__(self):
        """Initialize registry with default methods."""
        self._methods: Dict[str, GedMethod] = {}
        self._register_defaults()

    def _register_defaults(self) -> None:
        """Register default methods."""
        for formulation in ("f1", "f2", "f2_alt", "f2u"):
            self.register(FormulationMethod(formulation))
        self.register(RelaxationMethod("f1lp"))
        self.register(RelaxationMethod("f2lp"))
        self.register(AStarMethod())
        self.register(BeamMethod())
        self.register(BipartiteMethod())
        self.register(HausdorffMethod())

    def register(self, method: GedMethod) -> None:
        """
        Register a distance method.

        Args:
            method: GedMethod instance
        """
        if not isinstance(method, GedMethod):
            raise TypeError("Method must be an instance of GedMethod")

        self._methods[method.name] = method

    def get(self, name: str) -> GedMethod:
        """
        Get a method by name.

        Args:
            name: Method name

        Returns:
            GedMethod instance

        Raises:
            BenchmarkError: If method not found
        """
        if name not in self._methods:
            raise BenchmarkError(f"Unknown method '{name}'. Available: {', '.join(self._methods)}")
        return self._methods[name]

    def names(self) -> List[str]:
        return list(self._methods)

    def list_all(self) -> List[GedMethod]:
        """List all registered methods."""
        return list(self._methods.values())

    def get_applicable(self, g1: AttributedGraph, g2: AttributedGraph) -> List[GedMethod]:
        """
        Get all methods applicable to a graph pair.
        """
        return [method for method in self._methods.values() if method.is_applicable(g1, g2)]

    def with_role(self, *roles: MethodRole) -> List[GedMethod]:
        return [method for method in self._methods.values() if method.role in roles]
