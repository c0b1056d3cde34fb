"""
Error Handling

Exception hierarchy with CLI exit codes and a formatter for terminal and
structured output.
"""

from packed_thinnings.errors.exceptions import (
    BenchmarkMismatchError,
    FuelExhaustedError,
    InvariantViolation,
    ParseError,
    ScopeMismatchError,
    ThinningsError,
    UnboundVariableError,
    UnknownOperationError,
)
from packed_thinnings.errors.formatter import ErrorFormatter

__all__ = [
    "ThinningsError",
    "InvariantViolation",
    "ScopeMismatchError",
    "ParseError",
    "UnboundVariableError",
    "FuelExhaustedError",
    "UnknownOperationError",
    "BenchmarkMismatchError",
    "ErrorFormatter",
]
