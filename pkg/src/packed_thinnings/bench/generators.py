"""
Deterministic Generators

Random thinnings and terms from a GenSpec. Every stream is a numpy PCG64
generator seeded through a SeedSequence; independent child streams come from
SeedSequence.spawn, so the same GenSpec yields the same values everywhere.
"""

from typing import List

import numpy as np

from packed_thinnings.bench.models import GenSpec
from packed_thinnings.thin import Thinning
from packed_thinnings.terms import AppD, DBTerm, LamD, OpenTerm, VarD, from_debruijn


def rng_for(spec: GenSpec) -> np.random.Generator:
    """The generator a spec's values are drawn from."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed)))


def spawn(spec: GenSpec, count: int) -> List[GenSpec]:
    """Split a spec into `count` independent child specs."""
    children = np.random.SeedSequence(spec.seed).spawn(count)
    return [
        spec.model_copy(update={"seed": int(child.generate_state(1, np.uint64)[0])})
        for child in children
    ]


def random_thinning(rng: np.random.Generator, width: int, density: float) -> Thinning:
    """Each bit set independently with probability `density`."""
    bits = rng.random(width) < density
    packed = np.packbits(bits, bitorder="little")
    return Thinning(width, int.from_bytes(packed.tobytes(), "little"))


def gen_thinning(spec: GenSpec) -> Thinning:
    """A thinning of width spec.width."""
    return random_thinning(rng_for(spec), spec.width, spec.density)


def random_debruijn(rng: np.random.Generator, scope: int, nodes: int) -> DBTerm:
    """A well-scoped term with exactly `nodes` nodes over `scope` variables.

    A closed scope has no one-node term, so there `nodes` is raised to 2.
    """
    if scope == 0:
        return LamD(random_debruijn(rng, 1, max(nodes, 2) - 1))
    if nodes == 1:
        return VarD(int(rng.integers(scope)))
    if nodes == 2 or rng.random() < 0.3:
        return LamD(random_debruijn(rng, scope + 1, nodes - 1))
    left = int(rng.integers(1, nodes - 1))
    return AppD(
        random_debruijn(rng, scope, left),
        random_debruijn(rng, scope, nodes - 1 - left),
    )


def gen_term(spec: GenSpec) -> OpenTerm:
    """A random open term over a scope of spec.width with at most
    spec.term_size nodes (at least two when the scope is empty)."""
    rng = rng_for(spec)
    nodes = int(rng.integers(1, spec.term_size + 1))
    return from_debruijn(spec.width, random_debruijn(rng, spec.width, nodes))
