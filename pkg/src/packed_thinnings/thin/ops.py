"""
Thinning Operations

Smart constructors, the view, and the derived combinators. The view inspects
two things only: whether the big end is zero and bit 0 of the encoding.
Everything else is either view recursion or word-parallel bit arithmetic that
agrees with it.
"""

from typing import Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from packed_thinnings.bits import (
    bit_and,
    bit_or,
    complement_within,
    cons,
    deposit,
    extract,
    full,
    popcount,
    uncons,
)
from packed_thinnings.errors import ScopeMismatchError
from packed_thinnings.thin.models import DONE, Drop, Keep, Scope, Thinning, ThinView

T = TypeVar("T")

_EMPTY = Thinning(0, 0)


def done() -> Thinning:
    """The thinning from the empty scope to itself."""
    return _EMPTY


def keep(th: Thinning) -> Thinning:
    """Grow both scopes by one shared most-local variable."""
    return Thinning(th.big_end + 1, cons(True, th.encoding))


def drop(th: Thinning) -> Thinning:
    """Grow the target scope by one discarded most-local variable."""
    return Thinning(th.big_end + 1, cons(False, th.encoding))


def view(th: Thinning) -> ThinView:
    """Expose the top step of a thinning as Done, Keep tail or Drop tail."""
    if th.big_end == 0:
        return DONE
    head, tail = uncons(th.encoding)
    if head:
        return Keep(Thinning(th.big_end - 1, tail))
    return Drop(Thinning(th.big_end - 1, tail))


def none(n: int) -> Thinning:
    """Embed the empty scope into a scope of size n."""
    return Thinning(n, 0)


def ones(n: int) -> Thinning:
    """The identity thinning on a scope of size n."""
    return Thinning(n, full(n))


def kept(th: Thinning) -> int:
    """Size of the source scope."""
    return popcount(th.encoding)


def is_done(th: Thinning) -> bool:
    return th.big_end == 0


def is_none(th: Thinning) -> bool:
    """Does th discard every variable?"""
    return th.encoding == 0


def is_ones(th: Thinning) -> bool:
    """Is th the identity?"""
    return th.encoding == full(th.big_end)


def equal(a: Thinning, b: Thinning) -> bool:
    """Field equality; thinnings of different widths are never equal."""
    return a.big_end == b.big_end and a.encoding == b.encoding


def _same_width(a: Thinning, b: Thinning, what: str) -> None:
    if a.big_end != b.big_end:
        raise ScopeMismatchError(f"{what}: big ends differ", a.big_end, b.big_end, operation=what)


def join(a: Thinning, b: Thinning) -> Thinning:
    """Keep a variable whenever either input keeps it."""
    _same_width(a, b, "join")
    return Thinning(a.big_end, bit_or(a.encoding, b.encoding))


def meet(a: Thinning, b: Thinning) -> Thinning:
    """Keep a variable only when both inputs keep it."""
    _same_width(a, b, "meet")
    return Thinning(a.big_end, bit_and(a.encoding, b.encoding))


def cofull(th: Thinning) -> Thinning:
    """The thinning keeping exactly the variables th discards."""
    return Thinning(th.big_end, complement_within(th.big_end, th.encoding))


def compose(inner: Thinning, outer: Thinning) -> Thinning:
    """Embed along `inner` then along `outer`.

    Requires kept(outer) == inner.big_end. The result keeps the positions of
    outer's target that outer keeps and inner keeps too.

    Raises:
        ScopeMismatchError: If inner does not start where outer ends
    """
    k = popcount(outer.encoding)
    if k != inner.big_end:
        raise ScopeMismatchError(
            "compose: inner big end must equal outer small end",
            inner.big_end,
            k,
            operation="compose",
        )
    if inner.encoding == full(k):
        return outer
    if inner.encoding == 0:
        return Thinning(outer.big_end, 0)
    if outer.encoding == full(outer.big_end):
        return Thinning(outer.big_end, inner.encoding)
    return Thinning(outer.big_end, deposit(inner.encoding, outer.encoding))


def thicken(ph: Thinning, th: Thinning) -> Optional[Thinning]:
    """Factor th through ph.

    Returns ps with compose(ps, ph) == th, or None when th keeps a variable
    that ph discards.

    Raises:
        ScopeMismatchError: If ph and th have different big ends
    """
    _same_width(ph, th, "thicken")
    if bit_and(th.encoding, complement_within(ph.big_end, ph.encoding)):
        return None
    k = popcount(ph.encoding)
    if th.encoding == ph.encoding:
        return Thinning(k, full(k))
    return Thinning(k, extract(th.encoding, ph.encoding))


def positions(th: Thinning) -> Iterator[int]:
    """Ascending indices (from the local end) of the kept variables."""
    rest = th.encoding
    while rest:
        low = rest & -rest
        yield low.bit_length() - 1
        rest ^= low


def select(th: Thinning, items: Sequence[T]) -> List[T]:
    """The elements of a local-first sequence that th keeps, local-first.

    Raises:
        ScopeMismatchError: If len(items) differs from th.big_end
    """
    if len(items) != th.big_end:
        raise ScopeMismatchError("select: sequence length", len(items), th.big_end)
    return [items[i] for i in positions(th)]


def which(pred: Callable[[str], bool], scope: Scope) -> Tuple[Scope, Thinning]:
    """Filter a scope, returning the kept names and their embedding."""
    kept_names: List[str] = []
    th = done()
    for name in scope:
        if pred(name):
            kept_names.append(name)
            th = keep(th)
        else:
            th = drop(th)
    return Scope(tuple(kept_names)), th


def check_invariant(th: Thinning, src: Scope, tgt: Scope) -> bool:
    """Does th relate the scopes src and tgt?

    Walks the view exactly as the Done/Keep/Drop relation does: Done needs
    both scopes empty and the encoding 0; Keep needs bit 0 set and matching
    most-local names; Drop needs bit 0 clear and consumes a target name only.
    """
    if th.big_end != len(tgt) or th.encoding < 0 or th.encoding >> th.big_end:
        return False
    i = len(src)
    j = len(tgt)
    current = th
    while True:
        step = view(current)
        if isinstance(step, Keep):
            if i == 0 or src.names[i - 1] != tgt.names[j - 1]:
                return False
            i -= 1
            j -= 1
            current = step.tail
        elif isinstance(step, Drop):
            j -= 1
            current = step.tail
        else:
            return i == 0 and j == 0 and current.encoding == 0
