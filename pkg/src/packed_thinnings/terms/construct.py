"""
Open-Term Smart Constructors and Opened View

Build open terms from open subterms (computing supports as we go), and take
them apart again with the outer thinning pushed inside.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from packed_thinnings.errors import ScopeMismatchError
from packed_thinnings.thin import Done, Keep, Thinning, compose, drop, join, keep, thicken, view
from packed_thinnings.terms.models import VAR, AppC, LamC, OpenTerm, VarC


def var(n: int, i: int) -> OpenTerm:
    """Variable i (from the local end) of a scope of size n.

    Raises:
        ScopeMismatchError: If i is not below n
    """
    if not 0 <= i < n:
        raise ScopeMismatchError("Variable index out of scope", i, n)
    return OpenTerm(Thinning(n, 1 << i), VAR)


def relevant_pair(l: OpenTerm, r: OpenTerm) -> Tuple[AppC, Thinning]:
    """Pair two open terms over the same scope into an application node.

    The node's support is the join of the two outer thinnings; each child's
    thinning is its outer thinning thickened through that join.

    Raises:
        ScopeMismatchError: If the two scopes differ in width
    """
    outer = join(l.thinning, r.thinning)
    lt = thicken(outer, l.thinning)
    rt = thicken(outer, r.thinning)
    # Both thinnings sit inside their join.
    assert lt is not None and rt is not None
    return AppC(lt, l.term, rt, r.term), outer


def app(fun: OpenTerm, arg: OpenTerm) -> OpenTerm:
    """Application of two open terms over the same scope."""
    node, outer = relevant_pair(fun, arg)
    return OpenTerm(outer, node)


def lam(body: OpenTerm) -> OpenTerm:
    """Abstract the most local variable of `body`'s scope.

    Raises:
        ScopeMismatchError: If the body's scope is empty
    """
    step = view(body.thinning)
    if isinstance(step, Done):
        raise ScopeMismatchError("lam: body scope has no binder", 0, 1)
    return OpenTerm(step.tail, LamC(isinstance(step, Keep), body.term))


@dataclass(frozen=True, slots=True)
class VarView:
    index: int


@dataclass(frozen=True, slots=True)
class AppView:
    fun: OpenTerm
    arg: OpenTerm


@dataclass(frozen=True, slots=True)
class LamView:
    body: OpenTerm


TermView = Union[VarView, AppView, LamView]


def expose(t: OpenTerm) -> TermView:
    """Push the outer thinning one level inside and expose the top constructor.

    Children of an application come back over the same scope as `t`; the
    body of an abstraction comes back over that scope extended by the binder.
    """
    th, term = t.thinning, t.term
    if isinstance(term, VarC):
        return VarView(th.encoding.bit_length() - 1)
    if isinstance(term, AppC):
        return AppView(
            OpenTerm(compose(term.left_thin, th), term.left),
            OpenTerm(compose(term.right_thin, th), term.right),
        )
    return LamView(OpenTerm(keep(th) if term.used else drop(th), term.body))
