"""
Benchmark Models

Generator inputs and the structured benchmark record shared with the CLI.
"""

from typing import Any, Dict, List

from pydantic import BaseModel, Field


class GenSpec(BaseModel):
    """What to generate, and from which seed."""

    seed: int = Field(default=0, ge=0, lt=2**64)
    width: int = Field(default=0, ge=0)
    density: float = Field(default=0.5, ge=0.0, le=1.0)
    term_size: int = Field(default=16, ge=1)


class TimingRecord(BaseModel):
    """Timings for one operation at one width, in nanoseconds per operation."""

    op: str
    width: int
    iters: int
    batches: int
    packed_ns_per_op: float
    oracle_ns_per_op: float
    ratio: float
    packed_min_ns: float
    packed_max_ns: float
    oracle_min_ns: float
    oracle_max_ns: float


class BenchReport(BaseModel):
    """One benchmark invocation."""

    command: str = "bench"
    inputs: Dict[str, Any] = Field(default_factory=dict)
    timings: List[TimingRecord] = Field(default_factory=list)
