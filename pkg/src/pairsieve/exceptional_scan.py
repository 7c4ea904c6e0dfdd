"""Exhaustive scans for even numbers with no representation.

Goldbach: an even n is exceptional when no odd prime pair sums to it; the
fast path tries the smallest odd primes first and almost always exits after
one or two probes, with a full enumeration fallback for stragglers.  Twin:
n is exceptional when no prime p in (2, n] has p+2 prime (``strict`` also
demands p+2 <= n).  Every element a scan reports is re-verified through the
full counting path before the report is returned.

Scans are range-partitioned: workers own disjoint chunks of the even line,
read the shared table, and the chunk results are merged in range order, so
output is identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .pair_counts import _check_mode, count_goldbach, count_twin
from .sieve_core import LimitExceededError, OutOfRangeError, PrimeTable
from .sieve_function import PigeonholeResult, pigeonhole_interval

__all__ = [
    "ExceptionalReport",
    "IntervalExperiment",
    "ScanConfig",
    "bound_curve",
    "default_curve_points",
    "interval_experiment",
    "scan_exceptional",
    "scan_goldbach_exceptional",
    "scan_twin_exceptional",
]

DEFAULT_MAX_X = 10**8
_N_SMALL_PROBES = 64


@dataclass(frozen=True)
class ScanConfig:
    x: int
    kind: str
    mode: str = "extended"
    exponent_a: float = 5.0
    worker_count: int = 1
    segment_size: int = 1 << 16
    max_x: int = DEFAULT_MAX_X

    def __post_init__(self) -> None:
        if self.x < 4 or self.x % 2 != 0:
            raise ValueError(f"x must be even and >= 4, got {self.x}")
        if self.kind not in ("goldbach", "twin"):
            raise ValueError(f"unknown kind {self.kind!r}")
        _check_mode(self.mode)
        if self.exponent_a <= 0:
            raise ValueError("exponent_a must be positive")
        if self.worker_count < 1 or self.segment_size < 2:
            raise ValueError("worker_count >= 1 and segment_size >= 2 required")


@dataclass
class ExceptionalReport:
    x: int
    kind: str
    mode: str
    exponent_a: float
    elements: list[int]
    count: int
    curve: list[tuple[int, float, int]] = field(default_factory=list)


def default_curve_points(x: int) -> int:
    """Sample count giving roughly factor-10^(1/4) geometric spacing from 16."""
    if x <= 16:
        return 2
    return max(2, int(round(4 * math.log10(x / 16))) + 1)


def bound_curve(x: int, exponent_a: float, points: int) -> list[tuple[int, float]]:
    """Geometrically spaced (x_i, x_i / ln^A x_i) samples over [16, x]."""
    if x < 16:
        raise ValueError(f"need x >= 16, got {x}")
    if exponent_a <= 0:
        raise ValueError("exponent must be positive")
    xs = np.unique(np.rint(np.geomspace(16, x, points)).astype(np.int64))
    return [(int(xi), float(xi / math.log(xi) ** exponent_a)) for xi in xs]


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    """Partition of the even numbers in [lo, hi] into [a, b] chunks."""
    out = []
    a = lo
    while a <= hi:
        b = min(a + size - 2, hi)
        out.append((a, b))
        a = b + 2
    return out


def _goldbach_chunk(
    flags: np.ndarray, probes: np.ndarray, lo: int, hi: int
) -> list[int]:
    evens = np.arange(lo, hi + 1, 2, dtype=np.int64)
    pending = np.ones(len(evens), dtype=bool)
    for p in probes:
        if not pending.any():
            break
        idx = np.nonzero(pending)[0]
        cand = evens[idx] - int(p)
        ok = cand >= 3
        ok[ok] = flags[cand[ok]] == 1
        pending[idx[ok]] = False
    out = []
    for n in evens[pending]:
        n = int(n)
        # full enumeration over every odd prime partner
        if n >= 6:
            qs = np.nonzero(flags[: n - 2])[0]
            qs = qs[qs >= 3]
            if np.any(flags[n - qs] == 1):
                continue
        out.append(n)
    return out


def scan_goldbach_exceptional(table: PrimeTable, cfg: ScanConfig) -> ExceptionalReport:
    if cfg.x > cfg.max_x:
        raise LimitExceededError(f"x={cfg.x} above configured maximum {cfg.max_x}")
    if cfg.x > table.limit:
        raise OutOfRangeError(f"x={cfg.x} outside table range [0, {table.limit}]")
    flags = table.prime_flags(cfg.x)
    probes = table.primes(min(300, table.limit))
    probes = probes[(probes >= 3)][:_N_SMALL_PROBES]
    chunks = _chunks(4, cfg.x, cfg.segment_size)
    with ThreadPoolExecutor(max_workers=cfg.worker_count) as pool:
        parts = list(pool.map(lambda c: _goldbach_chunk(flags, probes, *c), chunks))
    elements = [n for part in parts for n in part]
    for n in elements:  # independent recount, not the early-exit path
        if count_goldbach(table, n) != 0:
            raise AssertionError(f"scan flagged n={n} but a representation exists")
    return _finish_report(elements, cfg)


def _twin_chunk(
    twin_lower: np.ndarray, mode: str, lo: int, hi: int
) -> list[int]:
    evens = np.arange(lo, hi + 1, 2, dtype=np.int64)
    bound = evens if mode == "extended" else evens - 2
    exceptional = np.searchsorted(twin_lower, bound, side="right") == 0
    return [int(n) for n in evens[exceptional]]


def scan_twin_exceptional(table: PrimeTable, cfg: ScanConfig) -> ExceptionalReport:
    if cfg.x > cfg.max_x:
        raise LimitExceededError(f"x={cfg.x} above configured maximum {cfg.max_x}")
    if cfg.x + 2 > table.limit:
        raise OutOfRangeError(f"x+2={cfg.x + 2} outside table range [0, {table.limit}]")
    flags = table.prime_flags(cfg.x + 2)
    ps = table.primes(cfg.x)
    ps = ps[ps >= 3]
    twin_lower = ps[flags[ps + 2] == 1]
    chunks = _chunks(4, cfg.x, cfg.segment_size)
    with ThreadPoolExecutor(max_workers=cfg.worker_count) as pool:
        parts = list(pool.map(lambda c: _twin_chunk(twin_lower, cfg.mode, *c), chunks))
    elements = [n for part in parts for n in part]
    for n in elements:  # independent recount through the counting path
        if count_twin(table, n, cfg.mode) != 0:
            raise AssertionError(f"scan flagged n={n} but a twin pair exists")
    return _finish_report(elements, cfg)


def _finish_report(elements: list[int], cfg: ScanConfig) -> ExceptionalReport:
    elements = sorted(elements)
    curve: list[tuple[int, float, int]] = []
    if cfg.x >= 16:
        arr = np.asarray(elements, dtype=np.int64)
        for xi, bound in bound_curve(cfg.x, cfg.exponent_a, default_curve_points(cfg.x)):
            observed = int(np.searchsorted(arr, xi, side="right"))
            curve.append((xi, bound, observed))
    return ExceptionalReport(
        x=cfg.x,
        kind=cfg.kind,
        mode=cfg.mode,
        exponent_a=cfg.exponent_a,
        elements=elements,
        count=len(elements),
        curve=curve,
    )


def scan_exceptional(table: PrimeTable, cfg: ScanConfig) -> ExceptionalReport:
    if cfg.kind == "goldbach":
        return scan_goldbach_exceptional(table, cfg)
    return scan_twin_exceptional(table, cfg)


@dataclass
class IntervalExperiment:
    M: int
    x: int
    kind: str
    mode: str
    exceptional_count: int
    half_width: int
    result: PigeonholeResult
    within_bound: bool


def interval_experiment(
    table: PrimeTable, cfg: ScanConfig, M: int
) -> IntervalExperiment:
    """Pigeonhole search from M with half-width set to the observed E(x)."""
    report = scan_exceptional(table, cfg)
    half_width = report.count
    if M < 4 or M + 2 * half_width > cfg.x:
        raise ValueError(
            f"interval [{M}, {M + 2 * half_width}] not inside the scanned range (4, {cfg.x}]"
        )
    exceptional = set(report.elements)
    res = pigeonhole_interval(M, half_width, lambda m: m in exceptional)
    within = bool(res.found and res.distance is not None and res.distance <= 2 * report.count)
    return IntervalExperiment(
        M=M,
        x=cfg.x,
        kind=cfg.kind,
        mode=cfg.mode,
        exceptional_count=report.count,
        half_width=half_width,
        result=res,
        within_bound=within,
    )
