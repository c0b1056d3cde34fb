"""
Reduction

Leftmost-outermost beta reduction on open co-de Bruijn terms, driven by
substitute().
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from packed_thinnings.config import get_settings
from packed_thinnings.thin import ones, positions
from packed_thinnings.terms.construct import AppView, LamView, app, expose, lam
from packed_thinnings.terms.instrument import VisitCounter
from packed_thinnings.terms.models import LamC, OpenTerm, Rename, Replace, Subst
from packed_thinnings.terms.ops import substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class NormalizeResult:
    """Outcome of normalize(); `normalized` is False when fuel ran out first."""

    term: OpenTerm
    steps: int
    normalized: bool


def contract(fun: OpenTerm, arg: OpenTerm, counter: Optional[VisitCounter] = None) -> OpenTerm:
    """Contract the redex `fun arg`, where fun's term is an abstraction."""
    node = fun.term
    assert isinstance(node, LamC)
    if not node.used:
        return OpenTerm(fun.thinning, node.body)
    body = OpenTerm(ones(node.body.support_size), node.body)
    entries = [Replace(arg)] + [Rename(p) for p in positions(fun.thinning)]
    return substitute(body, Subst(fun.width, tuple(entries)), counter)


def beta_step(t: OpenTerm, counter: Optional[VisitCounter] = None) -> Optional[OpenTerm]:
    """Contract the leftmost-outermost redex, or return None on a normal form.

    The redex is the first one met in a pre-order walk; the path back to the
    root is then rebuilt around the contractum.
    """
    # (term, parent index, role, sibling) per visited node
    visited: List[Tuple[OpenTerm, int, str, Optional[OpenTerm]]] = []
    pending: List[Tuple[OpenTerm, int, str, Optional[OpenTerm]]] = [(t, -1, "root", None)]
    while pending:
        node = pending.pop()
        index = len(visited)
        visited.append(node)
        view = expose(node[0])
        if isinstance(view, AppView):
            if isinstance(view.fun.term, LamC):
                return _rebuild(visited, index, contract(view.fun, view.arg, counter))
            pending.append((view.arg, index, "arg", view.fun))
            pending.append((view.fun, index, "fun", view.arg))
        elif isinstance(view, LamView):
            pending.append((view.body, index, "body", None))
    return None


def _rebuild(
    visited: List[Tuple[OpenTerm, int, str, Optional[OpenTerm]]], index: int, term: OpenTerm
) -> OpenTerm:
    while True:
        _, parent, role, sibling = visited[index]
        if role == "root":
            return term
        if role == "fun":
            term = app(term, sibling)
        elif role == "arg":
            term = app(sibling, term)
        else:
            term = lam(term)
        index = parent


def normalize(
    t: OpenTerm, fuel: Optional[int] = None, counter: Optional[VisitCounter] = None
) -> NormalizeResult:
    """Reduce until normal or until `fuel` steps have been taken.

    Args:
        t: Term to reduce
        fuel: Step limit; defaults to the configured default_fuel
        counter: Optional visit counter threaded into substitution

    Returns:
        NormalizeResult; on exhaustion the partial result is flagged unnormalized
    """
    limit = get_settings().default_fuel if fuel is None else fuel
    steps = 0
    current = t
    while True:
        nxt = beta_step(current, counter)
        if nxt is None:
            logger.debug(f"normalize: normal form after {steps} steps")
            return NormalizeResult(current, steps, True)
        if steps >= limit:
            logger.info(f"normalize: fuel {limit} exhausted")
            return NormalizeResult(current, steps, False)
        current = nxt
        steps += 1
