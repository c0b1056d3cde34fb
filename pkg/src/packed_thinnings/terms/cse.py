"""
Common Subexpression Scan

Groups the subterms of an open term by their co-de Bruijn structure. Two
subterms land in the same group exactly when they are alpha-equivalent as
terms over their own supports, whatever names or binder depths they occur at.
"""

import logging
from typing import Dict, List

from pydantic import BaseModel, Field

from packed_thinnings.thin import Thinning, compose, drop, keep, render
from packed_thinnings.terms.models import AppC, CBTerm, LamC, OpenTerm
from packed_thinnings.terms.printing import show_codebruijn

logger = logging.getLogger(__name__)


class CseOccurrence(BaseModel):
    """Where a subterm occurs: `path` spells the route from the root
    (L/R for application children, B for a lambda body), `outer` is the
    subterm's embedding into the scope at that point."""

    path: str
    outer: str


class CseGroup(BaseModel):
    """Alpha-equivalent subterms sharing one key."""

    key: str
    size: int
    support: int
    count: int
    occurrences: List[CseOccurrence] = Field(default_factory=list)


class CseReport(BaseModel):
    """Repeated subterms of at least `min_size` nodes, largest first."""

    min_size: int
    total_nodes: int
    groups: List[CseGroup] = Field(default_factory=list)


def cse_scan(t: OpenTerm, min_size: int = 1) -> CseReport:
    """Find repeated subterms.

    Args:
        t: Term to scan
        min_size: Smallest subterm (in nodes) worth reporting

    Returns:
        CseReport with every group of count >= 2 and size >= min_size
    """
    buckets: Dict[CBTerm, List[CseOccurrence]] = {}
    stack: List[tuple] = [("", t.thinning, t.term)]
    while stack:
        path, th, term = stack.pop()
        buckets.setdefault(term, []).append(CseOccurrence(path=path, outer=render(th)))
        if isinstance(term, AppC):
            stack.append((path + "R", compose(term.right_thin, th), term.right))
            stack.append((path + "L", compose(term.left_thin, th), term.left))
        elif isinstance(term, LamC):
            stack.append((path + "B", _under(th, term.used), term.body))

    groups = [
        CseGroup(
            key=show_codebruijn(term),
            size=term.size,
            support=term.support_size,
            count=len(found),
            occurrences=found,
        )
        for term, found in buckets.items()
        if len(found) >= 2 and term.size >= min_size
    ]
    groups.sort(key=lambda g: (-g.size, g.key))
    logger.debug(f"cse: {len(groups)} groups over {t.term.size} nodes (min size {min_size})")
    return CseReport(min_size=min_size, total_nodes=t.term.size, groups=groups)


def _under(th: Thinning, used: bool) -> Thinning:
    return keep(th) if used else drop(th)
