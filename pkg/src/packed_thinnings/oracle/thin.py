"""
Reference Thinnings

A thinning as an explicit sequence of Keep/Drop steps, with the naive
step-by-step version of every operation in packed_thinnings.thin. No bit
arithmetic appears below the conversion functions; these are meant to be
obviously correct, not fast.

Steps are stored local end first, so steps[i] describes bit i.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from packed_thinnings.errors import ScopeMismatchError
from packed_thinnings.thin import DONE, Done, Drop, Keep, Scope, Thinning, ThinView
from packed_thinnings.thin import done as packed_done
from packed_thinnings.thin import drop as packed_drop
from packed_thinnings.thin import keep as packed_keep
from packed_thinnings.thin import view as packed_view


@dataclass(frozen=True, slots=True)
class OracleThin:
    """A thinning spelled out step by step; True is Keep, False is Drop."""

    steps: Tuple[bool, ...] = ()

    @property
    def big_end(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "[" + "".join("1" if s else "0" for s in reversed(self.steps)) + "]"


def to_packed(o: OracleThin) -> Thinning:
    """Rebuild the packed form, most distant step first."""
    th = packed_done()
    for step in reversed(o.steps):
        th = packed_keep(th) if step else packed_drop(th)
    return th


def from_packed(th: Thinning) -> OracleThin:
    """Read the steps off by iterating the view."""
    steps: List[bool] = []
    current = th
    while True:
        v = packed_view(current)
        if isinstance(v, Done):
            return OracleThin(tuple(steps))
        steps.append(isinstance(v, Keep))
        current = v.tail


def oracle_view(o: OracleThin) -> ThinView:
    """Done, or Keep/Drop carrying the remaining OracleThin."""
    if not o.steps:
        return DONE
    tail = OracleThin(o.steps[1:])
    return Keep(tail) if o.steps[0] else Drop(tail)  # type: ignore[arg-type]


def oracle_none(n: int) -> OracleThin:
    return OracleThin((False,) * n)


def oracle_ones(n: int) -> OracleThin:
    return OracleThin((True,) * n)


def oracle_kept(o: OracleThin) -> int:
    count = 0
    for step in o.steps:
        if step:
            count += 1
    return count


def oracle_which(pred: Callable[[str], bool], scope: Scope) -> Tuple[Scope, OracleThin]:
    steps = [bool(pred(name)) for name in reversed(scope.names)]
    sub = [name for name in scope.names if pred(name)]
    return Scope(tuple(sub)), OracleThin(tuple(steps))


def _same_width(a: OracleThin, b: OracleThin, what: str) -> None:
    if a.big_end != b.big_end:
        raise ScopeMismatchError(f"{what}: big ends differ", a.big_end, b.big_end, operation=what)


def oracle_join(a: OracleThin, b: OracleThin) -> OracleThin:
    _same_width(a, b, "join")
    return OracleThin(tuple(x or y for x, y in zip(a.steps, b.steps)))


def oracle_meet(a: OracleThin, b: OracleThin) -> OracleThin:
    _same_width(a, b, "meet")
    return OracleThin(tuple(x and y for x, y in zip(a.steps, b.steps)))


def oracle_compose(inner: OracleThin, outer: OracleThin) -> OracleThin:
    """Walk outer; a Drop emits Drop, a Keep consumes one step of inner."""
    if oracle_kept(outer) != inner.big_end:
        raise ScopeMismatchError(
            "compose: inner big end must equal outer small end",
            inner.big_end,
            oracle_kept(outer),
            operation="compose",
        )
    out: List[bool] = []
    remaining = iter(inner.steps)
    for step in outer.steps:
        if step:
            out.append(next(remaining))
        else:
            out.append(False)
    return OracleThin(tuple(out))


def oracle_thicken(ph: OracleThin, th: OracleThin) -> Optional[OracleThin]:
    """Walk both thinnings together; fail where th keeps what ph drops."""
    _same_width(ph, th, "thicken")
    out: List[bool] = []
    for p, t in zip(ph.steps, th.steps):
        if p:
            out.append(t)
        elif t:
            return None
    return OracleThin(tuple(out))


def oracle_check_invariant(o: OracleThin, src: Scope, tgt: Scope) -> bool:
    """The Done/Keep/Drop relation, one step per recursive call."""
    v = oracle_view(o)
    if isinstance(v, Done):
        return len(src) == 0 and len(tgt) == 0
    if len(tgt) == 0:
        return False
    if isinstance(v, Keep):
        if len(src) == 0 or src.names[-1] != tgt.names[-1]:
            return False
        return oracle_check_invariant(v.tail, src.init(), tgt.init())  # type: ignore[arg-type]
    return oracle_check_invariant(v.tail, src, tgt.init())  # type: ignore[arg-type]
