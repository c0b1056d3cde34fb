"""Random inputs and small builders shared by the test modules."""

from typing import List

import numpy as np

from packed_thinnings.bench import random_debruijn, random_thinning
from packed_thinnings.terms import (
    DBTerm,
    OpenTerm,
    Rename,
    Subst,
    VarD,
    app,
    from_debruijn,
    to_debruijn,
    var,
)
from packed_thinnings.thin import Thinning, meet


def any_thinning(rng: np.random.Generator, max_width: int = 256) -> Thinning:
    """A thinning with random width and random density (sparse through dense)."""
    width = int(rng.integers(0, max_width + 1))
    return random_thinning(rng, width, float(rng.choice([0.0, 0.1, 0.5, 0.9, 1.0])))


def thinning_of(rng: np.random.Generator, width: int) -> Thinning:
    return random_thinning(rng, width, float(rng.random()))


def subthinning(rng: np.random.Generator, ph: Thinning) -> Thinning:
    """A thinning of the same width whose kept variables ph also keeps."""
    return meet(ph, thinning_of(rng, ph.big_end))


def random_term(rng: np.random.Generator, scope: int, max_nodes: int = 50) -> DBTerm:
    return random_debruijn(rng, scope, int(rng.integers(1, max_nodes + 1)))


def random_open(rng: np.random.Generator, scope: int, max_nodes: int = 50) -> OpenTerm:
    return from_debruijn(scope, random_term(rng, scope, max_nodes))


def naive_entries(s: Subst) -> List[DBTerm]:
    """A Subst as the list of de Bruijn terms the naive oracle expects."""
    return [
        VarD(entry.to) if isinstance(entry, Rename) else to_debruijn(entry.term)
        for entry in s.entries
    ]


def balanced_term(rng: np.random.Generator, scope: int, leaves: int) -> OpenTerm:
    """A balanced application tree of 2*leaves - 1 nodes over random variables.

    Built bottom-up, one level of pairs at a time.
    """
    level = [var(scope, int(rng.integers(scope))) for _ in range(leaves)]
    while len(level) > 1:
        paired = [app(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0]
