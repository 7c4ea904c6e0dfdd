"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive (trial division, direct set
enumeration) and never calls the optimized library paths it is used to
check.
"""

from __future__ import annotations

import math


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def prime_pi(n: int) -> int:
    return sum(1 for k in range(2, n + 1) if is_prime(k))


def prime_pi_residue(n: int, d: int, a: int) -> int:
    return sum(1 for k in range(2, n + 1) if is_prime(k) and k % d == a)


def goldbach_count(n: int) -> int:
    """Ordered decompositions n = p + q into odd primes."""
    return sum(
        1 for p in range(3, n - 2, 2) if is_prime(p) and is_prime(n - p) and n - p > 2
    )


def twin_count(n: int, mode: str = "extended") -> int:
    bound = n if mode == "extended" else n - 2
    return sum(1 for p in range(3, bound + 1, 2) if is_prime(p) and is_prime(p + 2))


def union_size(n: int, kind: str) -> int:
    """Union of the sieved residue classes among the primes <= n."""
    hit: set[int] = set()
    for p in range(3, math.isqrt(n) + 1, 2):
        if not is_prime(p):
            continue
        r = n % p if kind == "goldbach" else p - 2
        hit.update(a for a in primes_upto(n) if a % p == r)
    return len(hit)


def sieve_count(elements, primes, z) -> int:
    active = [p for p in primes if p < z]
    return sum(1 for a in elements if all(a % p for p in active))


def goldbach_exceptional_upto(x: int) -> list[int]:
    return [n for n in range(4, x + 1, 2) if goldbach_count(n) == 0]
