"""
Benchmarks

Seeded generators and a timing harness comparing packed thinnings with the
step-list oracle.
"""

from packed_thinnings.bench.generators import (
    gen_term,
    gen_thinning,
    random_debruijn,
    random_thinning,
    rng_for,
    spawn,
)
from packed_thinnings.bench.harness import OPS, check_agreement, run_benchmarks, summary, time_op
from packed_thinnings.bench.models import BenchReport, GenSpec, TimingRecord

__all__ = [
    "GenSpec",
    "TimingRecord",
    "BenchReport",
    "rng_for",
    "spawn",
    "random_thinning",
    "random_debruijn",
    "gen_thinning",
    "gen_term",
    "OPS",
    "check_agreement",
    "time_op",
    "run_benchmarks",
    "summary",
]
