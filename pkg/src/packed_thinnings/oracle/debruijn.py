"""
Reference de Bruijn Algorithms

Textbook shifting, renaming and substitution on plain de Bruijn terms. The
co-de Bruijn operations are checked against these.
"""

from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from packed_thinnings.config import get_settings
from packed_thinnings.errors import ScopeMismatchError
from packed_thinnings.thin import Thinning, positions
from packed_thinnings.terms.models import AppD, DBTerm, LamD, VarD


def _map_free(t: DBTerm, f: Callable[[int], DBTerm], depth: int = 0) -> DBTerm:
    """Replace each free index i by f(i), shifted past the binders crossed."""
    match t:
        case VarD(index):
            if index < depth:
                return t
            return shift(f(index - depth), depth) if depth else f(index - depth)
        case AppD(fun, arg):
            return AppD(_map_free(fun, f, depth), _map_free(arg, f, depth))
        case LamD(body):
            return LamD(_map_free(body, f, depth + 1))
    raise TypeError(f"Not a de Bruijn term: {t!r}")


def shift(t: DBTerm, d: int, cutoff: int = 0) -> DBTerm:
    """Add d to every index at or above cutoff (counting binders crossed)."""
    match t:
        case VarD(index):
            return VarD(index + d) if index >= cutoff else t
        case AppD(fun, arg):
            return AppD(shift(fun, d, cutoff), shift(arg, d, cutoff))
        case LamD(body):
            return LamD(shift(body, d, cutoff + 1))
    raise TypeError(f"Not a de Bruijn term: {t!r}")


def rename(t: DBTerm, th: Thinning) -> DBTerm:
    """Send free index i to the i-th variable th keeps.

    Raises:
        ScopeMismatchError: If t mentions an index th does not cover
    """
    kept = list(positions(th))

    def to(i: int) -> DBTerm:
        if i >= len(kept):
            raise ScopeMismatchError("rename: index beyond thinning source", i, len(kept))
        return VarD(kept[i])

    return _map_free(t, to)


def subst_naive(t: DBTerm, entries: Sequence[DBTerm]) -> DBTerm:
    """Simultaneous substitution: free index i becomes entries[i].

    Raises:
        ScopeMismatchError: If t mentions an index with no entry
    """

    def to(i: int) -> DBTerm:
        if i >= len(entries):
            raise ScopeMismatchError("subst: index beyond substitution domain", i, len(entries))
        return entries[i]

    return _map_free(t, to)


def free_vars(t: DBTerm, depth: int = 0) -> FrozenSet[int]:
    """Free indices of t, relative to its own scope."""
    match t:
        case VarD(index):
            return frozenset({index - depth}) if index >= depth else frozenset()
        case AppD(fun, arg):
            return free_vars(fun, depth) | free_vars(arg, depth)
        case LamD(body):
            return free_vars(body, depth + 1)
    raise TypeError(f"Not a de Bruijn term: {t!r}")


def _instantiate(body: DBTerm, arg: DBTerm) -> DBTerm:
    return _map_free(body, lambda i: arg if i == 0 else VarD(i - 1))


def beta_step_naive(t: DBTerm) -> Optional[DBTerm]:
    """Leftmost-outermost contraction, or None on a normal form."""
    match t:
        case AppD(LamD(body), arg):
            return _instantiate(body, arg)
        case AppD(fun, arg):
            stepped = beta_step_naive(fun)
            if stepped is not None:
                return AppD(stepped, arg)
            stepped = beta_step_naive(arg)
            return None if stepped is None else AppD(fun, stepped)
        case LamD(body):
            stepped = beta_step_naive(body)
            return None if stepped is None else LamD(stepped)
    return None


def normalize_naive(t: DBTerm, fuel: Optional[int] = None) -> Tuple[DBTerm, int, bool]:
    """Iterate beta_step_naive; returns (term, steps, normalized)."""
    limit = get_settings().default_fuel if fuel is None else fuel
    steps = 0
    while True:
        nxt = beta_step_naive(t)
        if nxt is None:
            return t, steps, True
        if steps >= limit:
            return t, steps, False
        t = nxt
        steps += 1


def size_db(t: DBTerm) -> int:
    """Node count."""
    nodes: List[DBTerm] = [t]
    count = 0
    while nodes:
        node = nodes.pop()
        count += 1
        if isinstance(node, AppD):
            nodes.extend((node.fun, node.arg))
        elif isinstance(node, LamD):
            nodes.append(node.body)
    return count
