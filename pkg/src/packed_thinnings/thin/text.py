"""Text and structured formats for thinnings."""

from typing import Any, Dict

from packed_thinnings.bits import parse_bits, render_bits
from packed_thinnings.errors import InvariantViolation
from packed_thinnings.thin.models import Thinning


def render(th: Thinning) -> str:
    """Bracketed bits, most significant first: {5, 13} renders as "[01101]"."""
    return render_bits(th.big_end, th.encoding)


def parse(text: str) -> Thinning:
    """Inverse of render.

    Raises:
        ParseError: On malformed text, with the offending position
    """
    width, encoding = parse_bits(text)
    return Thinning(width, encoding)


def to_dict(th: Thinning) -> Dict[str, Any]:
    """Structured dump. The encoding is a decimal string so it survives JSON readers."""
    return {"bigEnd": th.big_end, "encoding": str(th.encoding)}


def from_dict(data: Dict[str, Any]) -> Thinning:
    """Inverse of to_dict.

    Raises:
        InvariantViolation: If fields are missing or not numeric
    """
    try:
        return Thinning(int(data["bigEnd"]), int(data["encoding"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InvariantViolation(f"Malformed thinning record: {e}", {"record": data}) from e
