"""
Term Operations

Operations that exploit knowing each subterm's exact support: weakening
without traversal, alpha-equivalence as syntactic equality, and substitution
that skips every subterm the substitution does not touch.
"""

import logging
from typing import List, Optional, Sequence

from packed_thinnings.bits import popcount
from packed_thinnings.errors import InvariantViolation, ScopeMismatchError
from packed_thinnings.thin import Thinning, compose, drop, kept, ones, positions, select
from packed_thinnings.terms.construct import app, lam, var
from packed_thinnings.terms.instrument import VisitCounter, tick
from packed_thinnings.terms.models import (
    AppC,
    CBTerm,
    LamC,
    OpenTerm,
    Rename,
    Replace,
    Subst,
    SubstEntry,
    VarC,
    check_app,
)

logger = logging.getLogger(__name__)


def thin_open_term(
    t: OpenTerm, th: Thinning, counter: Optional[VisitCounter] = None
) -> OpenTerm:
    """Embed `t` into a wider scope along `th`.

    Only the outer thinning changes; the term is shared as is, so `counter`
    never records a visit.

    Raises:
        ScopeMismatchError: If th's small end is not t's ambient width
    """
    if kept(th) != t.width:
        raise ScopeMismatchError("thin: small end must equal term width", kept(th), t.width)
    return OpenTerm(compose(t.thinning, th), t.term)


def alpha_eq(a: OpenTerm, b: OpenTerm) -> bool:
    """Alpha-equivalence, which here is plain structural equality.

    Raises:
        ScopeMismatchError: If the terms live in scopes of different widths
    """
    if a.width != b.width:
        raise ScopeMismatchError("alpha_eq: ambient widths differ", a.width, b.width)
    return a.thinning == b.thinning and a.term == b.term


def support(t: OpenTerm) -> List[int]:
    """The free de Bruijn indices of `t`, ascending."""
    return list(positions(t.thinning))


def size(term: CBTerm) -> int:
    """Node count, read off the cached field."""
    return term.size


def validate(term: CBTerm) -> None:
    """Check every node's invariants, whatever the debug-check setting.

    Raises:
        InvariantViolation: At the first offending node
    """
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, AppC):
            check_app(node)
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, LamC):
            if node.used and node.body.support_size < 1:
                raise InvariantViolation("Used binder needs a non-empty body support")
            stack.append(node.body)
        elif not isinstance(node, VarC):
            raise InvariantViolation(f"Not a co-de Bruijn node: {node!r}")


def validate_open(t: OpenTerm) -> None:
    """validate() plus the outer thinning/support agreement."""
    if popcount(t.thinning.encoding) != t.term.support_size:
        raise InvariantViolation(
            "Outer thinning does not select the term's support",
            {"kept": popcount(t.thinning.encoding), "support": t.term.support_size},
        )
    validate(t.term)


def substitute(t: OpenTerm, s: Subst, counter: Optional[VisitCounter] = None) -> OpenTerm:
    """Apply a simultaneous substitution.

    At every subterm the substitution is first restricted to the subterm's
    support. If what remains only renames, and does so monotonically, the
    renaming is itself a thinning and the subterm is reused without being
    visited. Otherwise the node is visited and the substitution pushed down.

    Raises:
        ScopeMismatchError: If s does not cover t's ambient scope
    """
    if s.source_size != t.width:
        raise ScopeMismatchError(
            "substitute: substitution domain differs from term scope", s.source_size, t.width
        )
    result = _subst(t.thinning, t.term, s.entries, s.target_size, counter)
    if counter is not None:
        logger.debug(f"substitute: {counter.visits} node visits over a {t.term.size}-node term")
    return result


def _subst(
    th: Thinning,
    term: CBTerm,
    entries: Sequence[SubstEntry],
    target: int,
    counter: Optional[VisitCounter],
) -> OpenTerm:
    # Work items: ("subst", th, term, entries, target) restricts and then
    # visits or reuses; "app", "lam" and "lam-" rebuild from finished children.
    done: List[OpenTerm] = []
    work: List[tuple] = [("subst", th, term, entries, target)]
    while work:
        item = work.pop()
        step = item[0]
        if step == "app":
            right = done.pop()
            done.append(app(done.pop(), right))
            continue
        if step == "lam":
            done.append(lam(done.pop()))
            continue
        if step == "lam-":
            body = done.pop()
            done.append(OpenTerm(body.thinning, LamC(False, body.term)))
            continue

        _, th, term, entries, target = item
        local = select(th, entries)
        renamed = _as_thinning(local, target)
        if renamed is not None:
            done.append(OpenTerm(renamed, term))
            continue
        tick(counter, term)
        if isinstance(term, VarC):
            entry = local[0]
            done.append(var(target, entry.to) if isinstance(entry, Rename) else entry.term)
        elif isinstance(term, AppC):
            work.append(("app",))
            work.append(("subst", term.right_thin, term.right, local, target))
            work.append(("subst", term.left_thin, term.left, local, target))
        elif isinstance(term, LamC):
            if term.used:
                under = [Rename(0)] + [_weaken(entry, target) for entry in local]
                work.append(("lam",))
                work.append(("subst", ones(len(under)), term.body, under, target + 1))
            else:
                work.append(("lam-",))
                work.append(("subst", ones(len(local)), term.body, local, target))
        else:
            raise TypeError(f"Not a co-de Bruijn term: {term!r}")
    return done[0]


def _as_thinning(local: Sequence[SubstEntry], target: int) -> Optional[Thinning]:
    encoding = 0
    last = -1
    for entry in local:
        if not isinstance(entry, Rename) or entry.to <= last:
            return None
        encoding |= 1 << entry.to
        last = entry.to
    return Thinning(target, encoding)


def _weaken(entry: SubstEntry, target: int) -> SubstEntry:
    """Move an entry under one more binder in the target scope."""
    if isinstance(entry, Rename):
        return Rename(entry.to + 1)
    return Replace(thin_open_term(entry.term, drop(ones(target))))


def weaken_subst(s: Subst) -> Subst:
    """The substitution to use under a binder: the binder maps to itself,
    everything else is weakened past it."""
    return Subst(
        s.target_size + 1,
        (Rename(0),) + tuple(_weaken(entry, s.target_size) for entry in s.entries),
    )


def closed(t: OpenTerm) -> bool:
    """Does t mention no variable of its ambient scope?"""
    return t.thinning.encoding == 0
