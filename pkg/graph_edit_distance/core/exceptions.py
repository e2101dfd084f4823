"""Custom exceptions for the graph edit distance toolkit."""


class GraphEditDistanceError(Exception):
    """Base exception for all graph edit distance errors."""
    pass


class GraphFormatError(GraphEditDistanceError):
    """Raised when a graph file cannot be parsed."""
    pass


class GraphValidationError(GraphEditDistanceError):
    """Raised when a constructed graph violates the graph invariants."""

    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class CostModelError(GraphEditDistanceError):
    """Raised when cost model operations fail."""
    pass


class FormulationError(GraphEditDistanceError):
    """Raised when a BLP model cannot be built or decoded."""
    pass


class SolverError(GraphEditDistanceError):
    """Raised on internal LP or branch-and-bound failures."""
    pass


class AssignmentError(GraphEditDistanceError):
    """Raised when an assignment problem is malformed."""
    pass


class BenchmarkError(GraphEditDistanceError):
    """Raised when a benchmark run cannot be configured or executed."""
    pass
