"""Exception types shared across the package."""

from __future__ import annotations


class GeodeticError(Exception):
    """Base class for all package-specific errors."""


class ParseError(GeodeticError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ValidationError(GeodeticError):
    """Well-formed input that violates a documented invariant or precondition."""


class DisconnectedGraphError(GeodeticError):
    """Operation requires a connected graph or a reachable vertex pair."""


class BudgetExceededError(GeodeticError):
    """Exhaustive search stopped by the node budget before finding an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search node budget exceeded after {nodes} nodes")
        self.nodes = nodes


class StructuralError(GeodeticError):
    """Input lacks the structure the algorithm relies on; names a witness vertex."""

    def __init__(self, message: str, vertex: int | None = None):
        if vertex is not None:
            message = f"{message} (at vertex {vertex})"
        super().__init__(message)
        self.vertex = vertex


class UncoverableColorError(GeodeticError):
    """A declared color of the multigraph appears on no edge."""
