"""
Timing Harness

Times each thinning operation on packed thinnings and on the step-list
oracle over the same pre-generated inputs. Every input is run through both
representations during warmup and the results compared before any timing.
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from packed_thinnings.bench.generators import random_debruijn, random_thinning, rng_for, spawn
from packed_thinnings.bench.models import BenchReport, GenSpec, TimingRecord
from packed_thinnings.config import get_settings
from packed_thinnings.errors import BenchmarkMismatchError, UnknownOperationError
from packed_thinnings.oracle import (
    OracleThin,
    from_packed,
    oracle_compose,
    oracle_join,
    oracle_kept,
    oracle_meet,
    oracle_thicken,
    oracle_view,
    rename,
    to_packed,
)
from packed_thinnings.thin import Done, Thinning, compose, join, kept, meet, thicken, view
from packed_thinnings.terms import from_debruijn, thin_open_term, to_debruijn

logger = logging.getLogger(__name__)

# Distinct inputs per (op, width); the timed loop cycles through them.
INPUT_POOL = 32
THIN_TERM_NODES = 32
OPS = ("join", "meet", "compose", "view-drain", "kept", "thicken", "thin-term")


@dataclass
class OpCase:
    """One operation's inputs and its two implementations."""

    packed: Callable[..., Any]
    oracle: Callable[..., Any]
    packed_args: List[Tuple[Any, ...]]
    oracle_args: List[Tuple[Any, ...]]
    agree: Callable[[Any, Any], bool]


def _same_thinning(p: Optional[Thinning], o: Optional[OracleThin]) -> bool:
    if p is None or o is None:
        return p is None and o is None
    return p == to_packed(o)


def _drain_packed(th: Thinning) -> int:
    steps = 0
    while not isinstance(v := view(th), Done):
        th = v.tail
        steps += 1
    return steps


def _drain_oracle(o: OracleThin) -> int:
    steps = 0
    while not isinstance(v := oracle_view(o), Done):
        o = v.tail  # type: ignore[assignment]
        steps += 1
    return steps


def _thinnings(spec: GenSpec, per_input: int) -> List[List[Thinning]]:
    out = []
    for child in spawn(spec, INPUT_POOL):
        rng = rng_for(child)
        out.append([random_thinning(rng, spec.width, spec.density) for _ in range(per_input)])
    return out


def _build_case(op: str, spec: GenSpec) -> OpCase:
    if op in ("join", "meet"):
        pairs = [tuple(p) for p in _thinnings(spec, 2)]
        return OpCase(
            packed=join if op == "join" else meet,
            oracle=oracle_join if op == "join" else oracle_meet,
            packed_args=pairs,
            oracle_args=[tuple(from_packed(t) for t in p) for p in pairs],
            agree=_same_thinning,
        )
    if op == "compose":
        pairs = []
        for child in spawn(spec, INPUT_POOL):
            rng = rng_for(child)
            outer = random_thinning(rng, spec.width, spec.density)
            inner = random_thinning(rng, kept(outer), spec.density)
            pairs.append((inner, outer))
        return OpCase(
            packed=compose,
            oracle=oracle_compose,
            packed_args=pairs,
            oracle_args=[(from_packed(i), from_packed(o)) for i, o in pairs],
            agree=_same_thinning,
        )
    if op == "thicken":
        # th inside ph, so thicken always has an answer to compare
        pairs = [(ph, meet(ph, other)) for ph, other in _thinnings(spec, 2)]
        return OpCase(
            packed=thicken,
            oracle=oracle_thicken,
            packed_args=pairs,
            oracle_args=[(from_packed(p), from_packed(t)) for p, t in pairs],
            agree=_same_thinning,
        )
    if op in ("kept", "view-drain"):
        singles = [(ths[0],) for ths in _thinnings(spec, 1)]
        return OpCase(
            packed=kept if op == "kept" else _drain_packed,
            oracle=oracle_kept if op == "kept" else _drain_oracle,
            packed_args=singles,
            oracle_args=[(from_packed(t),) for (t,) in singles],
            agree=lambda p, o: p == o,
        )
    if op == "thin-term":
        packed_args, oracle_args = [], []
        for child in spawn(spec, INPUT_POOL):
            rng = rng_for(child)
            th = random_thinning(rng, spec.width, spec.density)
            db = random_debruijn(rng, kept(th), THIN_TERM_NODES)
            packed_args.append((from_debruijn(kept(th), db), th))
            oracle_args.append((db, th))
        return OpCase(
            packed=thin_open_term,
            oracle=rename,
            packed_args=packed_args,
            oracle_args=oracle_args,
            agree=lambda p, o: to_debruijn(p) == o,
        )
    raise UnknownOperationError(op, OPS)


def check_agreement(op: str, case: OpCase) -> None:
    """Run every input through both sides and compare.

    Raises:
        BenchmarkMismatchError: On the first disagreement
    """
    for i, (pa, oa) in enumerate(zip(case.packed_args, case.oracle_args)):
        p = case.packed(*pa)
        o = case.oracle(*oa)
        if not case.agree(p, o):
            raise BenchmarkMismatchError(
                f"{op}: packed and oracle results differ on input {i}",
                {"op": op, "input": i, "packed": str(p), "oracle": str(o)},
            )


def _batch_ns(fn: Callable[..., Any], args: Sequence[Tuple[Any, ...]], iters: int) -> float:
    n = len(args)
    start = time.perf_counter_ns()
    for i in range(iters):
        fn(*args[i % n])
    return (time.perf_counter_ns() - start) / iters


def time_op(
    op: str,
    spec: GenSpec,
    iters: int,
    batches: Optional[int] = None,
    warmup: Optional[int] = None,
) -> TimingRecord:
    """Time one operation at spec.width, packed against oracle.

    Args:
        op: One of OPS
        spec: Seed, width and density for input generation
        iters: Operations per timed batch
        batches: Timed batches (default from settings, at least 3)
        warmup: Untimed rounds over the input pool before timing

    Returns:
        TimingRecord with mean/min/max ns per operation for both sides

    Raises:
        UnknownOperationError: If op is not in OPS
        BenchmarkMismatchError: If the two sides ever disagree
    """
    if op not in OPS:
        raise UnknownOperationError(op, OPS)
    settings = get_settings()
    batches = max(3, batches if batches is not None else settings.bench_batches)
    warmup = warmup if warmup is not None else settings.bench_warmup

    case = _build_case(op, spec)
    check_agreement(op, case)
    for _ in range(warmup):
        _batch_ns(case.packed, case.packed_args, len(case.packed_args))
        _batch_ns(case.oracle, case.oracle_args, len(case.oracle_args))

    packed = [_batch_ns(case.packed, case.packed_args, iters) for _ in range(batches)]
    oracle = [_batch_ns(case.oracle, case.oracle_args, iters) for _ in range(batches)]
    packed_mean = sum(packed) / batches
    oracle_mean = sum(oracle) / batches
    ratio = oracle_mean / packed_mean if packed_mean > 0 else float("inf")
    logger.info(f"bench {op}@{spec.width}: ratio {ratio:.1f}")
    return TimingRecord(
        op=op,
        width=spec.width,
        iters=iters,
        batches=batches,
        packed_ns_per_op=packed_mean,
        oracle_ns_per_op=oracle_mean,
        ratio=ratio,
        packed_min_ns=min(packed),
        packed_max_ns=max(packed),
        oracle_min_ns=min(oracle),
        oracle_max_ns=max(oracle),
    )


def run_benchmarks(
    widths: Iterable[int],
    ops: Iterable[str],
    iters: int,
    seed: int,
    density: float = 0.5,
    batches: Optional[int] = None,
) -> BenchReport:
    """Time every op at every width.

    Raises:
        UnknownOperationError: Before any timing, if an op name is unknown
        ValueError: If a width is not positive
    """
    widths = list(widths)
    ops = list(ops)
    for op in ops:
        if op not in OPS:
            raise UnknownOperationError(op, OPS)
    for width in widths:
        if width <= 0:
            raise ValueError(f"Benchmark widths must be positive, got {width}")
    if iters < 1:
        raise ValueError(f"iters must be at least 1, got {iters}")

    report = BenchReport(
        inputs={"widths": widths, "ops": ops, "iters": iters, "seed": seed, "density": density}
    )
    for width in widths:
        for op in ops:
            spec = GenSpec(seed=seed, width=width, density=density)
            report.timings.append(time_op(op, spec, iters, batches=batches))
    return report


def summary(report: BenchReport) -> Dict[str, float]:
    """Ratio per `op@width`."""
    return {f"{t.op}@{t.width}": t.ratio for t in report.timings}
