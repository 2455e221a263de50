"""
Core exceptions for icdef.
Exception hierarchy with error codes and CLI exit-code mapping.
"""
from typing import Optional, Dict, Any, Tuple
from enum import Enum


class ErrorCode(str, Enum):
    """Standard error codes for the application."""
    # General errors (1000-1099)
    UNKNOWN_ERROR = "E1000"
    VALIDATION_ERROR = "E1001"
    NOT_FOUND = "E1002"

    # Construction errors (1100-1199)
    PRECONDITION_FAILED = "E1100"
    INFEASIBLE = "E1101"
    UNKNOWN_METHOD = "E1102"

    # Coloring errors (1200-1299)
    IMPROPER_COLORING = "E1200"
    INCOMPLETE_COLORING = "E1201"

    # Document errors (1300-1399)
    DOCUMENT_MALFORMED = "E1300"
    DOCUMENT_SCHEMA = "E1301"

    # Search errors (1400-1499)
    BUDGET_EXHAUSTED = "E1400"
    DEFICIENCY_CAP_REACHED = "E1401"

    # Internal consistency (1900-1999)
    INCONSISTENT_BOUNDS = "E1900"


class DeficiencyError(Exception):
    """
    Base exception for all icdef errors.

    Attributes:
        message: Human-readable error message
        code: Machine-readable error code
        details: Additional error context
        exit_code: Process exit code the CLI should use
    """
    def __init__(
        self,
        message: str,
        code: ErrorCode = ErrorCode.UNKNOWN_ERROR,
        details: Optional[Dict[str, Any]] = None,
        exit_code: int = 2
    ):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}
        self.exit_code = exit_code

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for machine-readable output."""
        return {
            "error": {
                "code": self.code.value,
                "message": self.message,
                "details": self.details
            }
        }


class ValidationError(DeficiencyError):
    """Invalid argument values (sizes, parameters, vertices)."""
    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(
            message=message,
            code=ErrorCode.VALIDATION_ERROR,
            details=details,
            exit_code=2
        )


class NotFoundError(DeficiencyError):
    """A vertex or anchor that does not exist in the graph."""
    def __init__(
        self,
        resource: str,
        identifier: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        message = f"{resource} not found"
        if identifier:
            message = f"{resource} '{identifier}' not found"
        super().__init__(
            message=message,
            code=ErrorCode.NOT_FOUND,
            details=details,
            exit_code=2
        )


class PreconditionError(DeficiencyError):
    """A hypothesis of the construction is not satisfied."""
    def __init__(
        self,
        hypothesis: str,
        message: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        details = details or {}
        details["hypothesis"] = hypothesis
        super().__init__(
            message=message or f"Precondition violated: {hypothesis}",
            code=ErrorCode.PRECONDITION_FAILED,
            details=details,
            exit_code=2
        )
        self.hypothesis = hypothesis


class InfeasibleError(DeficiencyError):
    """The requested coloring provably does not exist."""
    def __init__(
        self,
        message: str,
        reference: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        details = details or {}
        if reference:
            details["reference"] = reference
        super().__init__(
            message=message,
            code=ErrorCode.INFEASIBLE,
            details=details,
            exit_code=2
        )
        self.reference = reference


class UnknownMethodError(DeficiencyError):
    """Raised when a construction method name is not registered."""
    def __init__(self, method: str):
        super().__init__(
            message=f"Construction method '{method}' not found",
            code=ErrorCode.UNKNOWN_METHOD,
            details={"method": method},
            exit_code=2
        )


class ImproperColoringError(DeficiencyError):
    """Two adjacent edges share a color."""
    def __init__(self, first: Tuple[Any, Any], second: Tuple[Any, Any], color: int):
        super().__init__(
            message=f"Edges {first} and {second} share color {color}",
            code=ErrorCode.IMPROPER_COLORING,
            details={"edges": [repr(first), repr(second)], "color": color},
            exit_code=1
        )
        self.edges = (first, second)
        self.color = color


class IncompleteColoringError(DeficiencyError):
    """An edge of the graph has no color."""
    def __init__(self, edge: Tuple[Any, Any]):
        super().__init__(
            message=f"Edge {edge} is not colored",
            code=ErrorCode.INCOMPLETE_COLORING,
            details={"edge": repr(edge)},
            exit_code=1
        )
        self.edge = edge


class DocumentError(DeficiencyError):
    """Malformed or schema-violating coloring document."""
    def __init__(
        self,
        message: str,
        code: ErrorCode = ErrorCode.DOCUMENT_MALFORMED,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(
            message=message,
            code=code,
            details=details,
            exit_code=2
        )


class BudgetExhaustedError(DeficiencyError):
    """Raised when a search runs out of nodes before reaching a verdict."""
    def __init__(
        self,
        message: str = "Search budget exhausted",
        nodes: Optional[int] = None
    ):
        details = {}
        if nodes is not None:
            details["nodes"] = nodes
        super().__init__(
            message=message,
            code=ErrorCode.BUDGET_EXHAUSTED,
            details=details,
            exit_code=3
        )


class InconsistentBoundsError(DeficiencyError):
    """Lower bound exceeds upper bound: an implementation bug, never a user error."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code=ErrorCode.INCONSISTENT_BOUNDS,
            details=details,
            exit_code=70
        )
