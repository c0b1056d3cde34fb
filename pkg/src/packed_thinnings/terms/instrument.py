"""Visit counting for term traversals."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class VisitCounter:
    """Counts co-de Bruijn nodes a traversal actually inspects.

    Pass one to the traversals that accept `counter=`; operations that reuse a
    subterm without looking inside it leave the count untouched.
    """

    visits: int = 0
    by_kind: Counter = field(default_factory=Counter)

    def visit(self, node: object) -> None:
        self.visits += 1
        self.by_kind[type(node).__name__] += 1

    def reset(self) -> None:
        self.visits = 0
        self.by_kind.clear()


def tick(counter: Optional[VisitCounter], node: object) -> None:
    if counter is not None:
        counter.visit(node)
