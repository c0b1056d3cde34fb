"""
Oracles

Slow, obviously-correct reference versions of the thinning operations and of
de Bruijn renaming, substitution and reduction.
"""

from packed_thinnings.oracle.debruijn import (
    beta_step_naive,
    free_vars,
    normalize_naive,
    rename,
    shift,
    size_db,
    subst_naive,
)
from packed_thinnings.oracle.thin import (
    OracleThin,
    from_packed,
    oracle_check_invariant,
    oracle_compose,
    oracle_join,
    oracle_kept,
    oracle_meet,
    oracle_none,
    oracle_ones,
    oracle_thicken,
    oracle_view,
    oracle_which,
    to_packed,
)

__all__ = [
    "OracleThin",
    "to_packed",
    "from_packed",
    "oracle_view",
    "oracle_none",
    "oracle_ones",
    "oracle_kept",
    "oracle_which",
    "oracle_join",
    "oracle_meet",
    "oracle_compose",
    "oracle_thicken",
    "oracle_check_invariant",
    "shift",
    "rename",
    "subst_naive",
    "free_vars",
    "beta_step_naive",
    "normalize_naive",
    "size_db",
]
