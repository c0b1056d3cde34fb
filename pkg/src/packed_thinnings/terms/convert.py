"""
Conversions

Named <-> de Bruijn <-> co-de Bruijn. Scopes are outermost-first, so the last
name of a scope is de Bruijn index 0 and bit 0 of every thinning.
"""

from collections import Counter
from typing import List, Optional, Tuple

from packed_thinnings.config import get_settings
from packed_thinnings.errors import InvariantViolation, ScopeMismatchError, UnboundVariableError
from packed_thinnings.thin import Scope, Thinning, compose, drop, keep
from packed_thinnings.terms.construct import app, lam, var
from packed_thinnings.terms.models import (
    AppC,
    AppD,
    AppN,
    DBTerm,
    LamC,
    LamD,
    LamN,
    NamedTerm,
    OpenTerm,
    VarC,
    VarD,
    VarN,
)


def from_named(scope: Scope, t: NamedTerm) -> DBTerm:
    """Replace names by binder distances; the innermost match wins.

    Raises:
        UnboundVariableError: If a name is neither bound nor in scope
    """
    env = list(scope.names)
    done: List[DBTerm] = []
    work: List[Tuple[str, object]] = [("visit", t)]
    while work:
        step, item = work.pop()
        if step == "app":
            arg = done.pop()
            done.append(AppD(done.pop(), arg))
        elif step == "lam":
            env.pop()
            done.append(LamD(done.pop()))
        else:
            match item:
                case VarN(name):
                    done.append(VarD(_binder_distance(env, name)))
                case AppN(fun, arg):
                    work.extend((("app", None), ("visit", arg), ("visit", fun)))
                case LamN(binder, body):
                    env.append(binder)
                    work.extend((("lam", None), ("visit", body)))
                case _:
                    raise TypeError(f"Not a named term: {item!r}")
    return done[0]


def _binder_distance(env: List[str], name: str) -> int:
    for k in range(len(env) - 1, -1, -1):
        if env[k] == name:
            return len(env) - 1 - k
    raise UnboundVariableError(name)


def to_named(scope: Scope, t: DBTerm, base: Optional[str] = None) -> NamedTerm:
    """Give names back, inventing binder names `base`, `base1`, `base2`, ...

    A binder gets the first candidate not already in scope, so the result
    never captures.

    Raises:
        ScopeMismatchError: If an index points outside the scope
        InvariantViolation: If an index points at a scope name shadowed by a
            more local one, which no name can reach
    """
    base = base or get_settings().fresh_name_base
    env = list(scope.names)
    taken = Counter(env)
    done: List[NamedTerm] = []
    work: List[Tuple[str, object]] = [("visit", t)]
    while work:
        step, item = work.pop()
        if step == "app":
            arg = done.pop()
            done.append(AppN(done.pop(), arg))
        elif step == "lam":
            binder = env.pop()
            taken[binder] -= 1
            done.append(LamN(binder, done.pop()))
        else:
            match item:
                case VarD(index):
                    done.append(VarN(_name_at(env, index)))
                case AppD(fun, arg):
                    work.extend((("app", None), ("visit", arg), ("visit", fun)))
                case LamD(body):
                    binder = _fresh(base, taken)
                    env.append(binder)
                    taken[binder] += 1
                    work.extend((("lam", None), ("visit", body)))
                case _:
                    raise TypeError(f"Not a de Bruijn term: {item!r}")
    return done[0]


def _fresh(base: str, taken: Counter) -> str:
    if not taken[base]:
        return base
    k = 1
    while taken[f"{base}{k}"]:
        k += 1
    return f"{base}{k}"


def _name_at(env: List[str], index: int) -> str:
    if not 0 <= index < len(env):
        raise ScopeMismatchError("de Bruijn index out of scope", index, len(env))
    name = env[len(env) - 1 - index]
    if name in env[len(env) - index :]:
        raise InvariantViolation(f"Variable {name} is shadowed", {"index": index})
    return name


def from_debruijn(n: int, t: DBTerm) -> OpenTerm:
    """Compute supports bottom-up and build the co-de Bruijn form over a scope of size n.

    Raises:
        ScopeMismatchError: If the term is not well scoped under n
    """
    done: List[OpenTerm] = []
    work: List[Tuple[str, int, object]] = [("visit", n, t)]
    while work:
        step, width, item = work.pop()
        if step == "app":
            arg = done.pop()
            done.append(app(done.pop(), arg))
        elif step == "lam":
            done.append(lam(done.pop()))
        else:
            match item:
                case VarD(index):
                    done.append(var(width, index))
                case AppD(fun, arg):
                    work.extend(
                        (("app", width, None), ("visit", width, arg), ("visit", width, fun))
                    )
                case LamD(body):
                    work.extend((("lam", width, None), ("visit", width + 1, body)))
                case _:
                    raise TypeError(f"Not a de Bruijn term: {item!r}")
    return done[0]


def to_debruijn(t: OpenTerm) -> DBTerm:
    """Read the de Bruijn term back off an open term."""
    done: List[DBTerm] = []
    work: List[Tuple[str, Optional[Thinning], object]] = [("visit", t.thinning, t.term)]
    while work:
        step, th, term = work.pop()
        if step == "app":
            arg = done.pop()
            done.append(AppD(done.pop(), arg))
        elif step == "lam":
            done.append(LamD(done.pop()))
        elif isinstance(term, VarC):
            done.append(VarD(th.encoding.bit_length() - 1))
        elif isinstance(term, AppC):
            work.extend(
                (
                    ("app", None, None),
                    ("visit", compose(term.right_thin, th), term.right),
                    ("visit", compose(term.left_thin, th), term.left),
                )
            )
        elif isinstance(term, LamC):
            under = keep(th) if term.used else drop(th)
            work.extend((("lam", None, None), ("visit", under, term.body)))
        else:
            raise TypeError(f"Not a co-de Bruijn term: {term!r}")
    return done[0]


def from_named_open(scope: Scope, t: NamedTerm) -> OpenTerm:
    """Named term straight to an open co-de Bruijn term over `scope`."""
    return from_debruijn(len(scope), from_named(scope, t))


def to_named_open(scope: Scope, t: OpenTerm, base: Optional[str] = None) -> NamedTerm:
    """Open co-de Bruijn term back to named syntax over `scope`.

    Raises:
        ScopeMismatchError: If the term's ambient width is not len(scope)
    """
    if t.width != len(scope):
        raise ScopeMismatchError("Term width does not match scope", t.width, len(scope))
    return to_named(scope, to_debruijn(t), base)
