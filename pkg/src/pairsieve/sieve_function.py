"""The abstract sieve count S(A, P, z) and its elementary laws.

A is a finite multiset of positive integers, P a set of primes, z a real
threshold; S counts the elements of A divisible by no p in P with p < z
(strict, so z = p and z = p + eps behave differently).  The module also
carries the pigeonhole search used by the interval experiments: among
consecutive even positions with a bounded number of exceptional ones, a
non-exceptional position sits within a bounded distance of the endpoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable

__all__ = [
    "AxiomSuiteResult",
    "IncrementSet",
    "PigeonholeResult",
    "SieveInstance",
    "increment_bound",
    "pigeonhole_interval",
    "random_instance",
    "run_axiom_suite",
    "sieve_count",
]


def _is_prime_td(k: int) -> bool:
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


@dataclass(frozen=True)
class SieveInstance:
    """A finite multiset of positive integers with a sieving prime set.

    ``elements`` is kept sorted with multiplicity; multiset equality of
    values decides disjointness in :class:`IncrementSet`.
    """

    elements: tuple[int, ...]
    primes: frozenset[int]
    z: float

    def __post_init__(self) -> None:
        if any(a < 1 for a in self.elements):
            raise ValueError("all elements must be >= 1")
        if tuple(sorted(self.elements)) != self.elements:
            object.__setattr__(self, "elements", tuple(sorted(self.elements)))
        bad = [p for p in self.primes if not _is_prime_td(p)]
        if bad:
            raise ValueError(f"non-prime entries in sieving set: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class IncrementSet:
    """A base instance together with a disjoint increment multiset."""

    base: SieveInstance
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        overlap = set(self.base.elements) & set(self.delta)
        if overlap:
            raise ValueError(f"increment overlaps base: {sorted(overlap)}")
        if any(a < 1 for a in self.delta):
            raise ValueError("all increment elements must be >= 1")


def sieve_count(inst: SieveInstance) -> int:
    """S(A, P, z): elements of A with no divisor p in P, p < z."""
    active = [p for p in inst.primes if p < inst.z]
    return sum(1 for a in inst.elements if all(a % p for p in active))


def increment_bound(inc: IncrementSet, z1: float, z2: float) -> tuple[int, int]:
    """(S(A+dA, P, z1), S(A, P, z2) + |dA|) for z1 >= z2; lhs <= rhs."""
    if z1 < z2:
        raise ValueError(f"need z1 >= z2, got z1={z1}, z2={z2}")
    combined = replace(
        inc.base, elements=tuple(sorted(inc.base.elements + inc.delta)), z=z1
    )
    lhs = sieve_count(combined)
    rhs = sieve_count(replace(inc.base, z=z2)) + len(inc.delta)
    return lhs, rhs


@dataclass(frozen=True)
class PigeonholeResult:
    found: bool
    value: int | None
    distance: int | None
    checked: int


def pigeonhole_interval(
    M: int, half_width: int, is_exceptional: Callable[[int], bool]
) -> PigeonholeResult:
    """Least non-exceptional even number in [M, M + 2*half_width].

    Returns an exhausted (found=False) result when every even position in
    the closed interval is exceptional; that is a reportable outcome, not
    an error.
    """
    if M % 2 != 0:
        raise ValueError(f"M must be even, got {M}")
    if half_width < 0:
        raise ValueError(f"half_width must be >= 0, got {half_width}")
    for k in range(half_width + 1):
        m = M + 2 * k
        if not is_exceptional(m):
            return PigeonholeResult(found=True, value=m, distance=2 * k, checked=k + 1)
    return PigeonholeResult(found=False, value=None, distance=None, checked=half_width + 1)


# --- randomized instance suite (shared by tests and the verify CLI) ---

_PRIME_POOL = [p for p in range(2, 60) if _is_prime_td(p)]


def random_instance(
    rng: random.Random, max_value: int = 400, max_size: int = 60
) -> SieveInstance:
    size = rng.randint(0, max_size)
    elements = tuple(sorted(rng.randint(1, max_value) for _ in range(size)))
    k = rng.randint(0, len(_PRIME_POOL))
    primes = frozenset(rng.sample(_PRIME_POOL, k))
    z = rng.uniform(0.0, 62.0)
    return SieveInstance(elements=elements, primes=primes, z=z)


def _random_disjoint_delta(
    rng: random.Random, base: SieveInstance, max_value: int = 400
) -> tuple[int, ...]:
    used = set(base.elements)
    pool = [v for v in range(1, max_value + 1) if v not in used]
    k = rng.randint(0, min(20, len(pool)))
    return tuple(sorted(rng.sample(pool, k)))


@dataclass
class AxiomSuiteResult:
    cases: int
    seed: int
    failures: dict[str, int]
    strict_equalities: int

    @property
    def ok(self) -> bool:
        return all(v == 0 for v in self.failures.values())


def run_axiom_suite(cases: int, seed: int) -> AxiomSuiteResult:
    """Randomized check of monotonicity, bounds, additivity, and the
    increment inequality.  Equality in the increment inequality is counted
    (the law is only guaranteed as <=), never treated as a failure."""
    rng = random.Random(seed)
    failures = {"monotonicity": 0, "bounds": 0, "additivity": 0, "increment": 0}
    strict_eq = 0
    for _ in range(cases):
        inst = random_instance(rng)

        z1 = rng.uniform(0.0, 62.0)
        z2 = rng.uniform(0.0, z1) if z1 > 0 else 0.0
        hi = sieve_count(replace(inst, z=z1))
        lo = sieve_count(replace(inst, z=z2))
        if hi > lo:
            failures["monotonicity"] += 1

        s = sieve_count(inst)
        if not 0 <= s <= len(inst):
            failures["bounds"] += 1

        delta = _random_disjoint_delta(rng, inst)
        inc = IncrementSet(base=inst, delta=delta)
        combined = replace(
            inst, elements=tuple(sorted(inst.elements + delta))
        )
        extra = sieve_count(replace(inst, elements=delta))
        if sieve_count(combined) != s + extra:
            failures["additivity"] += 1

        lhs, rhs = increment_bound(inc, z1, z2)
        if lhs > rhs:
            failures["increment"] += 1
        elif lhs == rhs:
            strict_eq += 1
    return AxiomSuiteResult(
        cases=cases, seed=seed, failures=failures, strict_equalities=strict_eq
    )
