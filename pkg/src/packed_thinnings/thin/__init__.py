"""
Thinnings

The packed thinning record, its smart constructors and view, derived
combinators, and text formats.
"""

from packed_thinnings.thin.models import DONE, Done, Drop, Keep, Scope, Thinning, ThinView
from packed_thinnings.thin.ops import (
    check_invariant,
    cofull,
    compose,
    done,
    drop,
    equal,
    is_done,
    is_none,
    is_ones,
    join,
    keep,
    kept,
    meet,
    none,
    ones,
    positions,
    select,
    thicken,
    view,
    which,
)
from packed_thinnings.thin.text import from_dict, parse, render, to_dict

__all__ = [
    "Thinning",
    "ThinView",
    "Done",
    "Keep",
    "Drop",
    "DONE",
    "Scope",
    "done",
    "keep",
    "drop",
    "view",
    "none",
    "ones",
    "kept",
    "is_done",
    "is_none",
    "is_ones",
    "equal",
    "join",
    "meet",
    "cofull",
    "compose",
    "thicken",
    "positions",
    "select",
    "which",
    "check_invariant",
    "render",
    "parse",
    "to_dict",
    "from_dict",
]
