"""
Terms

Untyped lambda terms in named, de Bruijn and co-de Bruijn syntax, with the
conversions between them and the operations co-de Bruijn syntax makes cheap.
"""

from packed_thinnings.terms.construct import (
    AppView,
    LamView,
    TermView,
    VarView,
    app,
    expose,
    lam,
    relevant_pair,
    var,
)
from packed_thinnings.terms.convert import (
    from_debruijn,
    from_named,
    from_named_open,
    to_debruijn,
    to_named,
    to_named_open,
)
from packed_thinnings.terms.cse import CseGroup, CseOccurrence, CseReport, cse_scan
from packed_thinnings.terms.instrument import VisitCounter
from packed_thinnings.terms.models import (
    VAR,
    AppC,
    AppD,
    AppN,
    CBTerm,
    DBTerm,
    LamC,
    LamD,
    LamN,
    NamedTerm,
    OpenTerm,
    Rename,
    Replace,
    Subst,
    SubstEntry,
    VarC,
    VarD,
    VarN,
)
from packed_thinnings.terms.ops import (
    alpha_eq,
    closed,
    size,
    substitute,
    support,
    thin_open_term,
    validate,
    validate_open,
    weaken_subst,
)
from packed_thinnings.terms.parser import parse_codebruijn, parse_named, parse_open
from packed_thinnings.terms.printing import show_codebruijn, show_debruijn, show_named, show_open
from packed_thinnings.terms.reduce import NormalizeResult, beta_step, contract, normalize

__all__ = [
    # Syntax
    "VarN",
    "AppN",
    "LamN",
    "NamedTerm",
    "VarD",
    "AppD",
    "LamD",
    "DBTerm",
    "VarC",
    "AppC",
    "LamC",
    "CBTerm",
    "VAR",
    "OpenTerm",
    "Rename",
    "Replace",
    "SubstEntry",
    "Subst",
    # Construction
    "var",
    "app",
    "lam",
    "relevant_pair",
    "expose",
    "VarView",
    "AppView",
    "LamView",
    "TermView",
    # Conversion
    "from_named",
    "to_named",
    "from_debruijn",
    "to_debruijn",
    "from_named_open",
    "to_named_open",
    # Operations
    "thin_open_term",
    "alpha_eq",
    "substitute",
    "weaken_subst",
    "support",
    "size",
    "closed",
    "validate",
    "validate_open",
    "VisitCounter",
    "beta_step",
    "contract",
    "normalize",
    "NormalizeResult",
    "cse_scan",
    "CseReport",
    "CseGroup",
    "CseOccurrence",
    # Text
    "parse_named",
    "parse_codebruijn",
    "parse_open",
    "show_named",
    "show_debruijn",
    "show_codebruijn",
    "show_open",
]
