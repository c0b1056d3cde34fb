"""
Packed Thinnings

Thinnings (order-preserving embeddings between scopes) packed into a width
and an arbitrary-precision bit pattern, reference implementations to check
them against, and the co-de Bruijn lambda terms built on top of them.
"""

__version__ = "0.1.0"

from packed_thinnings.bits import complement_within, deposit, extract, popcount
from packed_thinnings.config import ThinningsSettings, get_settings, set_debug_checks
from packed_thinnings.errors import (
    BenchmarkMismatchError,
    FuelExhaustedError,
    InvariantViolation,
    ParseError,
    ScopeMismatchError,
    ThinningsError,
    UnboundVariableError,
    UnknownOperationError,
)
from packed_thinnings.thin import (
    Scope,
    Thinning,
    compose,
    drop,
    join,
    keep,
    kept,
    meet,
    none,
    ones,
    thicken,
    view,
)
from packed_thinnings.terms import (
    OpenTerm,
    Subst,
    alpha_eq,
    cse_scan,
    from_debruijn,
    from_named,
    normalize,
    parse_named,
    substitute,
    thin_open_term,
    to_debruijn,
    to_named,
)

__all__ = [
    "__version__",
    # Bits
    "popcount",
    "deposit",
    "extract",
    "complement_within",
    # Thinnings
    "Thinning",
    "Scope",
    "keep",
    "drop",
    "view",
    "none",
    "ones",
    "kept",
    "join",
    "meet",
    "compose",
    "thicken",
    # Terms
    "OpenTerm",
    "Subst",
    "parse_named",
    "from_named",
    "to_named",
    "from_debruijn",
    "to_debruijn",
    "thin_open_term",
    "alpha_eq",
    "substitute",
    "normalize",
    "cse_scan",
    # Config
    "ThinningsSettings",
    "get_settings",
    "set_debug_checks",
    # Errors
    "ThinningsError",
    "InvariantViolation",
    "ScopeMismatchError",
    "ParseError",
    "UnboundVariableError",
    "FuelExhaustedError",
    "UnknownOperationError",
    "BenchmarkMismatchError",
]
