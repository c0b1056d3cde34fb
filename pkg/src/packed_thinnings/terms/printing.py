"""Deterministic text renderings of the three term syntaxes.

Each printer walks the term with an explicit stack of pending pieces (text or
subterms), so deeply nested terms print without recursion.
"""

from typing import List, Union

from packed_thinnings.thin import render
from packed_thinnings.terms.models import (
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
    VarC,
    VarD,
    VarN,
)


def show_named(t: NamedTerm) -> str:
    """Surface syntax: `\\x. t`, left-associative application."""
    out: List[str] = []
    pending: List[Union[str, NamedTerm]] = [t]
    while pending:
        item = pending.pop()
        match item:
            case str():
                out.append(item)
            case VarN(name):
                out.append(name)
            case LamN(binder, body):
                pending.extend((body, f"\\{binder}. "))
            case AppN(fun, arg):
                wrap_fun = isinstance(fun, LamN)
                wrap_arg = not isinstance(arg, VarN)
                pending.extend(
                    (
                        ")" if wrap_arg else "",
                        arg,
                        " (" if wrap_arg else " ",
                        ")" if wrap_fun else "",
                        fun,
                        "(" if wrap_fun else "",
                    )
                )
            case _:
                raise TypeError(f"Not a named term: {item!r}")
    return "".join(out)


def show_debruijn(t: DBTerm) -> str:
    """Nameless syntax; compound children of an application are parenthesised,
    so the S combinator reads `\\ \\ \\ (2 0) (1 0)`."""
    out: List[str] = []
    pending: List[Union[str, DBTerm]] = [t]
    while pending:
        item = pending.pop()
        match item:
            case str():
                out.append(item)
            case VarD(index):
                out.append(str(index))
            case LamD(body):
                pending.extend((body, "\\ "))
            case AppD(fun, arg):
                pending.extend((*_db_child(arg), " ", *_db_child(fun)))
            case _:
                raise TypeError(f"Not a de Bruijn term: {item!r}")
    return "".join(out)


def _db_child(t: DBTerm) -> tuple:
    # Reversed, ready to push.
    return (t,) if isinstance(t, VarD) else (")", t, "(")


def show_codebruijn(t: CBTerm) -> str:
    """Prefix form with bracketed thinnings, e.g. `(app [10] (var) [01] (var))`."""
    out: List[str] = []
    pending: List[Union[str, CBTerm]] = [t]
    while pending:
        item = pending.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, VarC):
            out.append("(var)")
        elif isinstance(item, AppC):
            pending.extend((")", item.right, f" {render(item.right_thin)} ", item.left))
            out.append(f"(app {render(item.left_thin)} ")
        elif isinstance(item, LamC):
            pending.extend((")", item.body))
            out.append("(lam+ " if item.used else "(lam- ")
        else:
            raise TypeError(f"Not a co-de Bruijn term: {item!r}")
    return "".join(out)


def show_open(t: OpenTerm) -> str:
    """Outer thinning followed by the term."""
    return f"{render(t.thinning)} {show_codebruijn(t.term)}"
