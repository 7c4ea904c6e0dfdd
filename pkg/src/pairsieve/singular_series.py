"""Hardy-Littlewood constants and main-term diagnostics.

The twin-prime constant is the truncated product prod_{2<p<=L} (1 - 1/(p-1)^2)
with an analytic majorant for the tail; the per-n series multiplies in
(p-1)/(p-2) for each odd prime divisor of n.  The crude main term is
2*C*n/ln^2 n; the refined term replaces n/ln^2 n by the numerical integral
of dt/ln^2 t over [2, n], which is the only diagnostic that converges to the
observed counts at desk scale.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .pair_counts import count_goldbach, count_twin, _check_even, _check_kind
from .sieve_core import PrimeTable, _small_primes

__all__ = [
    "DEFAULT_TRUNCATION",
    "MainTermRecord",
    "SeriesValue",
    "integrate_inv_log_squared",
    "main_term",
    "singular_series_C",
    "twin_constant",
]

DEFAULT_TRUNCATION = 10**6


@dataclass(frozen=True)
class SeriesValue:
    value: float
    truncation_limit: int
    tail_bound: float


@functools.lru_cache(maxsize=8)
def twin_constant(truncation_limit: int = DEFAULT_TRUNCATION) -> SeriesValue:
    """Partial product of (1 - 1/(p-1)^2) over odd primes p <= limit.

    The dropped factors multiply to something in (1 - T, 1) where
    T = sum_{p>L} 1/(p-1)^2 <= integral_L^inf dx/(x-1)^2 = 1/(L-1), so the
    partial product overshoots the full one by at most value/(L-1).
    """
    if truncation_limit < 3:
        raise ValueError(f"need truncation_limit >= 3, got {truncation_limit}")
    ps = np.array(_small_primes(truncation_limit)[1:], dtype=np.float64)
    value = float(np.exp(np.log1p(-1.0 / (ps - 1.0) ** 2).sum()))
    tail_bound = value / (truncation_limit - 1)
    return SeriesValue(value=value, truncation_limit=truncation_limit, tail_bound=tail_bound)


def singular_series_C(n: int, truncation_limit: int = DEFAULT_TRUNCATION) -> SeriesValue:
    """Twin constant times prod (p-1)/(p-2) over the odd prime divisors of n."""
    _check_even(n, 4)
    base = twin_constant(truncation_limit)
    factor = 1.0
    m = n
    while m % 2 == 0:
        m //= 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            factor *= (p - 1) / (p - 2)
            while m % p == 0:
                m //= p
        p += 2
    if m > 1:
        factor *= (m - 1) / (m - 2)
    return SeriesValue(
        value=base.value * factor,
        truncation_limit=truncation_limit,
        tail_bound=base.tail_bound * factor,
    )


def _simpson(upper: float, panels: int) -> float:
    # substituting u = ln t maps the integral to e^u/u^2 over [ln 2, ln upper],
    # where a uniform composite Simpson grid converges quickly; a uniform grid
    # in t cannot resolve the left edge once upper is large
    a, b = math.log(2.0), math.log(upper)
    u = np.linspace(a, b, 2 * panels + 1)
    y = np.exp(u) / u**2
    h = (b - a) / (2 * panels)
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum()))


def integrate_inv_log_squared(
    upper: float, rtol: float = 1e-8, panels: int | None = None
) -> float:
    """integral_2^upper dt / ln^2 t by composite Simpson.

    With ``panels`` given, a single pass at that resolution; otherwise the
    panel count doubles until successive values agree to ``rtol``.
    """
    if upper <= 2.0:
        return 0.0
    if panels is not None:
        return _simpson(upper, panels)
    m = 64
    prev = _simpson(upper, m)
    while m < (1 << 22):
        m *= 2
        cur = _simpson(upper, m)
        if abs(cur - prev) <= rtol * abs(cur):
            return cur
        prev = cur
    return prev


@dataclass
class MainTermRecord:
    n: int
    kind: str
    series_value: float
    main_term: float
    refined_term: float | None
    actual: int
    ratio: float
    refined_ratio: float | None


def main_term(
    table: PrimeTable,
    n: int,
    kind: str,
    refined: bool = True,
    truncation_limit: int = DEFAULT_TRUNCATION,
) -> MainTermRecord:
    """Crude and integral-refined main terms joined with the observed count."""
    _check_even(n, 4)
    _check_kind(kind)
    if kind == "goldbach":
        c = singular_series_C(n, truncation_limit).value
        actual = count_goldbach(table, n)
    else:
        c = twin_constant(truncation_limit).value
        actual = count_twin(table, n, "extended")
    crude = 2.0 * c * n / math.log(n) ** 2
    refined_term = 2.0 * c * integrate_inv_log_squared(n) if refined else None
    return MainTermRecord(
        n=n,
        kind=kind,
        series_value=c,
        main_term=crude,
        refined_term=refined_term,
        actual=actual,
        ratio=actual / crude,
        refined_ratio=(actual / refined_term) if refined_term else None,
    )
