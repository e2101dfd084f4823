"""Distance method components."""

from graph_edit_distance.methods.base import GedMethod, MethodOptions, MethodOutcome, MethodRole
from graph_edit_distance.methods.registry import MethodRegistry

__all__ = ["GedMethod", "MethodOptions", "MethodOutcome", "MethodRole", "MethodRegistry"]
