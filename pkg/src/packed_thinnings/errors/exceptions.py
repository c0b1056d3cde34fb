"""
Exception Hierarchy

Every error raised by the library derives from ThinningsError and carries the
exit code the CLI reports for it.
"""

from typing import Any, Dict, Iterable, Optional


class ThinningsError(Exception):
    """Base class for all packed-thinnings errors."""

    exit_code: int = 1

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        """Initialize the error.

        Args:
            message: Human-readable description
            context: Optional structured details (widths, positions, names)
        """
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = context or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a structured record."""
        return {
            "error": True,
            "error_type": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
            "context": self.context,
        }


class InvariantViolation(ThinningsError):
    """A value breaks a representation invariant."""


class ScopeMismatchError(ThinningsError):
    """Two scopes that must agree in width do not."""

    exit_code = 2

    def __init__(self, message: str, left: int, right: int, **context: Any):
        super().__init__(
            f"{message} ({left} vs {right})", {"left": left, "right": right, **context}
        )
        self.left = left
        self.right = right


class ParseError(ThinningsError):
    """Malformed thinning pattern or term text."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(
            f"{message} at position {position}",
            {"text": text, "position": position},
        )
        self.text = text
        self.position = position


class UnboundVariableError(ThinningsError):
    """A named variable has no binder and is not in the ambient scope."""

    def __init__(self, name: str):
        super().__init__(f"Unbound variable: {name}", {"name": name})
        self.name = name


class FuelExhaustedError(ThinningsError):
    """Normalization stopped before reaching a normal form."""

    exit_code = 4

    def __init__(self, fuel: int, steps: int):
        super().__init__(
            f"Fuel exhausted after {steps} steps (fuel {fuel})",
            {"fuel": fuel, "steps": steps},
        )


class UnknownOperationError(ThinningsError):
    """A benchmark operation name is not recognised."""

    def __init__(self, name: str, valid: Iterable[str]):
        valid_list = sorted(valid)
        super().__init__(
            f"Unknown operation: {name} (valid: {', '.join(valid_list)})",
            {"name": name, "valid": valid_list},
        )


class BenchmarkMismatchError(ThinningsError):
    """Packed and oracle results disagree on the same input."""
