"""Prime tables, segmented sieving, and exact prime counting.

Everything downstream (pair counting, singular-series diagnostics,
exceptional-set scans) reads primality from a single immutable
:class:`PrimeTable`.  The table stores one bit per odd integer plus
cumulative prime-count checkpoints, so counting queries are cheap without
keeping a byte per integer resident.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CHECKPOINT_STRIDE",
    "DEFAULT_MAX_LIMIT",
    "InsufficientBaseError",
    "LimitExceededError",
    "OutOfRangeError",
    "PrimeTable",
    "Segment",
    "build_prime_table",
    "legendre_count",
    "legendre_count_batch",
    "prime_pi",
    "prime_pi_residue",
    "segmented_primes",
]

# Integers per pi checkpoint block.  One block = 32768 odd flags = 4096 bytes.
CHECKPOINT_STRIDE = 1 << 16
_BYTES_PER_BLOCK = CHECKPOINT_STRIDE // 16

DEFAULT_MAX_LIMIT = 10**9

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


class LimitExceededError(ValueError):
    """Requested table limit exceeds the configured maximum."""


class OutOfRangeError(ValueError):
    """Query point lies outside the range covered by the table."""


class InsufficientBaseError(ValueError):
    """Base table is too small to sieve the requested segment."""


@dataclass
class PrimeTable:
    """Bit-packed primality map over [0, limit] with prime-count checkpoints.

    ``bits`` holds one little-endian bit per odd integer (bit i of byte j is
    the flag for 2*(8j+i)+1).  ``checkpoints[k]`` is the number of odd primes
    below k*CHECKPOINT_STRIDE.  The table is immutable after construction and
    safe for concurrent reads; the flag/factor caches are grown lazily and
    only ever replaced by strictly larger arrays.
    """

    limit: int
    bits: np.ndarray
    checkpoints: np.ndarray
    _flags_cache: np.ndarray | None = field(default=None, repr=False)
    _spf_cache: np.ndarray | None = field(default=None, repr=False)

    def is_prime(self, k: int) -> bool:
        if k < 0 or k > self.limit:
            raise OutOfRangeError(f"{k} outside table range [0, {self.limit}]")
        if k == 2:
            return True
        if k < 2 or k % 2 == 0:
            return False
        i = k >> 1
        return bool((self.bits[i >> 3] >> (i & 7)) & 1)

    def _popcount_upto(self, i_max: int) -> int:
        """Set bits among odd-flag indices 0..i_max inclusive."""
        full_bytes = (i_max + 1) // 8
        block = full_bytes // _BYTES_PER_BLOCK
        cnt = int(self.checkpoints[block])
        cnt += int(_POPCOUNT8[self.bits[block * _BYTES_PER_BLOCK : full_bytes]].sum())
        rem = (i_max + 1) % 8
        if rem:
            cnt += int(_POPCOUNT8[self.bits[full_bytes] & ((1 << rem) - 1)])
        return cnt

    def prime_pi(self, n: int) -> int:
        if n < 0 or n > self.limit:
            raise OutOfRangeError(f"{n} outside table range [0, {self.limit}]")
        if n < 2:
            return 0
        return 1 + self._popcount_upto((n - 1) >> 1)

    def prime_flags(self, upto: int) -> np.ndarray:
        """uint8 array f of length upto+1 with f[k] = 1 iff k is prime."""
        if upto > self.limit:
            raise OutOfRangeError(f"{upto} outside table range [0, {self.limit}]")
        if self._flags_cache is None or len(self._flags_cache) <= upto:
            n_odd = (upto + 1) // 2  # odd integers 1, 3, ..., <= upto
            odd = np.unpackbits(self.bits, bitorder="little", count=n_odd)
            flags = np.zeros(upto + 1, dtype=np.uint8)
            flags[1::2] = odd
            if upto >= 2:
                flags[2] = 1
            self._flags_cache = flags
        return self._flags_cache[: upto + 1]

    def primes(self, upto: int | None = None) -> np.ndarray:
        """Sorted int64 array of the primes <= upto (default: the full table)."""
        if upto is None:
            upto = self.limit
        return np.nonzero(self.prime_flags(upto))[0].astype(np.int64)

    def smallest_prime_factor(self, upto: int) -> np.ndarray:
        """int64 array s with s[k] = smallest prime factor of k (s[0]=s[1]=0)."""
        if self._spf_cache is None or len(self._spf_cache) <= upto:
            from ._kernels import spf_sieve

            self._spf_cache = spf_sieve(upto)
        return self._spf_cache[: upto + 1]


@dataclass
class Segment:
    """Primality flags for the half-open range [lo, hi)."""

    lo: int
    hi: int
    flags: np.ndarray

    def primes(self) -> np.ndarray:
        return np.nonzero(self.flags)[0].astype(np.int64) + self.lo

    def is_prime(self, k: int) -> bool:
        if not self.lo <= k < self.hi:
            raise OutOfRangeError(f"{k} outside segment [{self.lo}, {self.hi})")
        return bool(self.flags[k - self.lo])


def build_prime_table(limit: int, max_limit: int = DEFAULT_MAX_LIMIT) -> PrimeTable:
    """Sieve of Eratosthenes up to ``limit``, odd-only and bit-packed."""
    if limit < 2:
        raise ValueError(f"table limit must be >= 2, got {limit}")
    if limit > max_limit:
        raise LimitExceededError(f"table limit {limit} exceeds maximum {max_limit}")
    n_odd = (limit + 1) // 2  # odd integers 1, 3, ..., index i <-> 2i+1
    odd = np.ones(n_odd, dtype=bool)
    odd[0] = False  # 1 is not prime
    for p in range(3, math.isqrt(limit) + 1, 2):
        if odd[p >> 1]:
            odd[(p * p) >> 1 :: p] = False
    bits = np.packbits(odd, bitorder="little")
    n_blocks = (len(bits) + _BYTES_PER_BLOCK - 1) // _BYTES_PER_BLOCK
    per_byte = np.zeros(n_blocks * _BYTES_PER_BLOCK, dtype=np.int64)
    per_byte[: len(bits)] = _POPCOUNT8[bits]
    block_counts = per_byte.reshape(n_blocks, _BYTES_PER_BLOCK).sum(axis=1)
    checkpoints = np.concatenate(([0], np.cumsum(block_counts)))
    return PrimeTable(limit=limit, bits=bits, checkpoints=checkpoints)


def segmented_primes(lo: int, hi: int, base: PrimeTable) -> Segment:
    """Sieve the half-open range [lo, hi) using the primes of ``base``.

    Segments over disjoint ranges compose: concatenating them over a
    partition of [2, N) reproduces the flags of a full table of limit N.
    """
    if not 2 <= lo <= hi:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi})")
    if lo == hi:
        return Segment(lo, hi, np.zeros(0, dtype=bool))
    if base.limit < math.isqrt(hi):
        raise InsufficientBaseError(
            f"base limit {base.limit} < sqrt({hi}); cannot sieve segment"
        )
    flags = np.ones(hi - lo, dtype=bool)
    for p in base.primes(math.isqrt(hi - 1)):
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start < hi:
            flags[start - lo :: p] = False
    return Segment(lo, hi, flags)


def prime_pi(table: PrimeTable, n: int) -> int:
    """Number of primes <= n (checkpoints plus a local bit scan)."""
    return table.prime_pi(n)


def prime_pi_residue(table: PrimeTable, n: int, d: int, a: int) -> int:
    """Number of primes p <= n with p = a (mod d)."""
    if d < 1:
        raise ValueError(f"modulus must be >= 1, got {d}")
    if not 0 <= a < d:
        raise ValueError(f"residue {a} not in [0, {d})")
    if n < 0 or n > table.limit:
        raise OutOfRangeError(f"{n} outside table range [0, {table.limit}]")
    if n < 2:
        return 0
    if d == 1:
        return table.prime_pi(n)
    flags = table.prime_flags(n)
    return int(flags[a::d].sum())


def _squarefree_divisors(primes: list[int], dmax: int):
    """All squarefree products of ``primes`` up to dmax, with sign and the
    square of the largest factor used (0 for the empty product)."""
    out_d = [1]
    out_mu = [1]
    out_thr = [0]

    def rec(idx: int, d: int, mu: int) -> None:
        for j in range(idx, len(primes)):
            p = primes[j]
            nd = d * p
            if nd > dmax:
                break
            out_d.append(nd)
            out_mu.append(-mu)
            out_thr.append(p * p)
            rec(j + 1, nd, -mu)

    rec(0, 1, 1)
    return (
        np.asarray(out_d, dtype=np.int64),
        np.asarray(out_mu, dtype=np.int64),
        np.asarray(out_thr, dtype=np.int64),
    )


def _small_primes(upto: int) -> list[int]:
    if upto < 2:
        return []
    sieve = np.ones(upto + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(upto) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def legendre_count(n: int) -> int:
    """pi(n) evaluated through the signed floor sum over squarefree divisors.

    Sieving is done with the primes p <= sqrt(n); the survivors of that sieve
    are 1 together with the primes in (sqrt(n), n], so the floor sum equals
    pi(n) - pi(sqrt(n)) + 1 and the result is corrected accordingly.  The
    identity with a direct bit-count of pi(n) is exact, not asymptotic.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    root = math.isqrt(n)
    primes = _small_primes(root)
    total = 0
    dvals, mus, _ = _squarefree_divisors(primes, n)
    for d, mu in zip(dvals.tolist(), mus.tolist()):
        total += mu * (n // d)
    return total - 1 + len(primes)


def legendre_count_batch(nmax: int) -> np.ndarray:
    """``legendre_count(n)`` for every 0 <= n <= nmax (entries below 4 are 0).

    Same signed floor sum as :func:`legendre_count`, accumulated for all n at
    once: each divisor d contributes mu(d)*floor(n/d) for n >= pmax(d)^2,
    which is a jump at the validity threshold plus a unit step at each later
    multiple of d.  Evaluation is a difference array plus one prefix sum.
    """
    if nmax < 4:
        raise ValueError(f"need nmax >= 4, got {nmax}")
    root = math.isqrt(nmax)
    primes = _small_primes(root)
    dvals, mus, thrs = _squarefree_divisors(primes, nmax)
    diff = np.zeros(nmax + 1, dtype=np.int64)
    for d, mu, thr in zip(dvals.tolist(), mus.tolist(), thrs.tolist()):
        diff[thr] += mu * (thr // d)
        start = (thr // d + 1) * d  # first multiple of d strictly above thr
        if start <= nmax:
            diff[start::d] += mu
    floor_sums = np.cumsum(diff)
    # correction: -1 for the survivor 1, +pi(sqrt(n)) for the sieving primes
    roots = np.sqrt(np.arange(nmax + 1, dtype=np.float64)).astype(np.int64)
    # guard against float rounding at perfect squares
    roots = np.where((roots + 1) * (roots + 1) <= np.arange(nmax + 1), roots + 1, roots)
    roots = np.where(roots * roots > np.arange(nmax + 1), roots - 1, roots)
    prime_arr = np.asarray(primes, dtype=np.int64)
    pi_root = np.searchsorted(prime_arr, roots, side="right")
    out = floor_sums - 1 + pi_root
    out[:4] = 0
    return out
