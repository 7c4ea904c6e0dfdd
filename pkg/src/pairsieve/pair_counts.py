"""Representation counts for even n: Goldbach decompositions and twin primes.

Two routes are kept deliberately separate for every n:

* a *direct* count (scan primes, test the partner),
* a signed *survivor* sum over squarefree moduli built from the odd primes
  up to sqrt(n), together with the brute-force union of the corresponding
  residue classes.

The survivor sum plus the union size equals pi(n) exactly; the survivor sum
tracks the direct count to within a term bounded by the number of sieving
primes.  Both facts are enforced by the test suite rather than assumed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .sieve_core import OutOfRangeError, PrimeTable, _squarefree_divisors

__all__ = [
    "DifferenceDecomposition",
    "PairCountRecord",
    "alpha_beta",
    "count_goldbach",
    "count_twin",
    "difference_decomposition",
    "moebius_survivors",
    "moebius_survivors_batch",
    "pair_count_record",
    "union_count",
]

KINDS = ("goldbach", "twin")
MODES = ("strict", "extended")


def _check_even(n: int, minimum: int) -> None:
    if n % 2 != 0 or n < minimum:
        raise ValueError(f"need an even n >= {minimum}, got {n}")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def alpha_beta(n: int, kind: str) -> list[tuple[int, int | None]]:
    """The paired index sequences whose sieve images are counted.

    For Goldbach the partner of i is n-i (undefined at i=n); for twins it is
    i+2.  Every defined pair satisfies a+b = n resp. b-a = 2 by construction.
    """
    _check_even(n, 4)
    _check_kind(kind)
    if kind == "goldbach":
        pairs: list[tuple[int, int | None]] = [(i, n - i) for i in range(1, n)]
        pairs.append((n, None))
        return pairs
    return [(i, i + 2) for i in range(1, n + 1)]


def count_goldbach(table: PrimeTable, n: int) -> int:
    """Number of ordered decompositions n = p + q into odd primes."""
    _check_even(n, 4)
    if n > table.limit:
        raise OutOfRangeError(f"{n} outside table range [0, {table.limit}]")
    if n < 6:
        return 0
    flags = table.prime_flags(n)
    odd_ps = table.primes(n - 3)
    odd_ps = odd_ps[odd_ps >= 3]
    return int(flags[n - odd_ps].sum())


def count_twin(table: PrimeTable, n: int, mode: str = "extended") -> int:
    """Number of primes p with 2 < p <= n and p+2 prime.

    ``extended`` allows p+2 to exceed n (the natural twin count up to n);
    ``strict`` additionally requires p+2 <= n.
    """
    _check_even(n, 4)
    _check_mode(mode)
    bound = n if mode == "extended" else n - 2
    if n + 2 > table.limit:
        raise OutOfRangeError(f"{n}+2 outside table range [0, {table.limit}]")
    flags = table.prime_flags(n + 2)
    ps = table.primes(bound)
    ps = ps[ps >= 3]
    return int(flags[ps + 2].sum())


def _survivor_moduli(table: PrimeTable, nmax: int):
    """Squarefree products of the odd primes <= sqrt(nmax), capped at nmax+2."""
    root = math.isqrt(nmax)
    odd_primes = [int(p) for p in table.primes(root) if p >= 3]
    dvals, mus, thrs = _squarefree_divisors(odd_primes, nmax + 2)
    order = np.argsort(thrs, kind="stable")
    return dvals[order], mus[order], thrs[order]


def moebius_survivors_batch(table: PrimeTable, ns: np.ndarray, kind: str) -> np.ndarray:
    """Term-by-term signed survivor sum for each even n in ``ns``."""
    _check_kind(kind)
    ns = np.asarray(ns, dtype=np.int64)
    if len(ns) == 0:
        return np.zeros(0, dtype=np.int64)
    nmax = int(ns.max())
    if np.any(ns % 2 != 0) or int(ns.min()) < 10:
        raise ValueError("all entries must be even and >= 10")
    if nmax > table.limit:
        raise OutOfRangeError(f"{nmax} outside table range [0, {table.limit}]")
    flags = table.prime_flags(nmax)
    pi_prefix = np.cumsum(flags.astype(np.int64))
    dvals, mus, thrs = _survivor_moduli(table, nmax)
    return _kernels.moebius_sum_batch(
        ns, flags, pi_prefix, dvals, mus, thrs, kind == "goldbach"
    )


def moebius_survivors(table: PrimeTable, n: int, kind: str) -> int:
    """Signed survivor sum at a single n (see :func:`moebius_survivors_batch`)."""
    return int(moebius_survivors_batch(table, np.array([n]), kind)[0])


def union_count(table: PrimeTable, n: int, kind: str) -> int:
    """Size of the union of the sieved residue classes among the primes <= n.

    One class per odd prime p <= sqrt(n): a = n (mod p) for Goldbach,
    a = p-2 (mod p) for twins.  Brute-force enumeration, no sign bookkeeping.
    """
    _check_even(n, 10)
    _check_kind(kind)
    if n > table.limit:
        raise OutOfRangeError(f"{n} outside table range [0, {table.limit}]")
    ps = table.primes(n)
    root = math.isqrt(n)
    mask = np.zeros(len(ps), dtype=bool)
    for p in table.primes(root):
        p = int(p)
        if p < 3:
            continue
        r = n % p if kind == "goldbach" else p - 2
        mask |= ps % p == r
    return int(mask.sum())


@dataclass
class PairCountRecord:
    """Direct count, survivor sum, and union size for one even n."""

    n: int
    kind: str
    mode: str
    direct: int
    moebius_survivors: int
    union_size: int
    pi_n: int


def pair_count_record(
    table: PrimeTable, n: int, kind: str, mode: str = "extended"
) -> PairCountRecord:
    _check_kind(kind)
    _check_mode(mode)
    direct = (
        count_goldbach(table, n) if kind == "goldbach" else count_twin(table, n, mode)
    )
    return PairCountRecord(
        n=n,
        kind=kind,
        mode=mode,
        direct=direct,
        moebius_survivors=moebius_survivors(table, n, kind),
        union_size=union_count(table, n, kind),
        pi_n=table.prime_pi(n),
    )


@dataclass
class DifferenceDecomposition:
    """How the twin count changes between two even levels n2 < n1.

    ``set1`` are primes a <= n2 whose shift a+2 is divisible by a prime in
    the root window (sqrt(n2), sqrt(n1)]; ``set2`` are primes in (n2, n1]
    whose shift has no odd prime factor up to sqrt(n1).  The boolean fields
    report the majorant chain
    ``set1 < (n2/p_min)(sqrt(n1)-sqrt(n2)) < sqrt(n1*n2)-n2 < n1-n2``
    (None when the root window holds no prime) and the bracketing
    ``0 <= d_diff < n1-n2`` of the count difference itself.
    """

    n1: int
    n2: int
    delta_p_size: int
    set1_size: int
    set2_size: int
    d_diff: int
    p_min: int | None
    set1_majorant_ok: bool | None
    geometric_mean_ok: bool | None
    width_ok: bool | None
    diff_nonneg: bool
    diff_below_width: bool


def difference_decomposition(
    table: PrimeTable, n1: int, n2: int, mode: str = "extended"
) -> DifferenceDecomposition:
    _check_even(n2, 16)
    _check_even(n1, 16)
    if n1 <= n2:
        raise ValueError(f"need n1 > n2, got n1={n1}, n2={n2}")
    if n1 + 2 > table.limit:
        raise OutOfRangeError(f"{n1}+2 outside table range [0, {table.limit}]")
    spf = table.smallest_prime_factor(n1 + 2)

    root1 = math.isqrt(n1)
    window = [int(p) for p in table.primes(root1) if p * p > n2 and p >= 3]
    p_min = window[0] if window else None

    ps2 = table.primes(n2)
    ps2 = ps2[ps2 >= 3]
    set1_size = int(_kernels.count_factor_in_window(ps2, spf, n2, n1))

    all_ps = table.primes(n1)
    delta_p = all_ps[all_ps > n2]
    set2_size = int(_kernels.count_rough_shifted(delta_p, spf, n1))

    d_diff = count_twin(table, n1, mode) - count_twin(table, n2, mode)

    width = n1 - n2
    if p_min is not None:
        majorant = (n2 / p_min) * (math.sqrt(n1) - math.sqrt(n2))
        middle = math.sqrt(n1 * n2) - n2
        set1_majorant_ok = set1_size < majorant
        geometric_mean_ok = majorant < middle
        width_ok = middle < width
    else:
        set1_majorant_ok = geometric_mean_ok = width_ok = None

    return DifferenceDecomposition(
        n1=n1,
        n2=n2,
        delta_p_size=int(len(delta_p)),
        set1_size=set1_size,
        set2_size=set2_size,
        d_diff=d_diff,
        p_min=p_min,
        set1_majorant_ok=set1_majorant_ok,
        geometric_mean_ok=geometric_mean_ok,
        width_ok=width_ok,
        diff_nonneg=d_diff >= 0,
        diff_below_width=d_diff < width,
    )
