"""Compiled inner loops (numba) for the counting-heavy paths.

Kept separate so the rest of the package stays plain numpy/python and the
jit cost is paid once per process.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = [
    "count_factor_in_window",
    "count_rough_shifted",
    "moebius_sum_batch",
    "spf_sieve",
]


@njit(cache=True)
def spf_sieve(limit):
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            for j in range(i, limit + 1, i):
                if spf[j] == 0:
                    spf[j] = i
    return spf


@njit(cache=True)
def moebius_sum_batch(ns, flags, pi_prefix, dvals, mus, thrs, goldbach):
    """Sum over squarefree moduli d of mu(d) * #{p prime <= n : p = r(d) (mod d)}.

    r(d) is n mod d in the Goldbach case and d-2 in the twin case.  ``dvals``
    must be sorted by ``thrs`` (square of the largest prime factor); modulus d
    participates for n >= thrs[d].  The d = 1 term is read from ``pi_prefix``.
    """
    out = np.empty(len(ns), dtype=np.int64)
    for i in range(len(ns)):
        n = ns[i]
        k = np.searchsorted(thrs, n, side="right")
        total = np.int64(0)
        for j in range(k):
            d = dvals[j]
            if d == 1:
                total += mus[j] * pi_prefix[n]
                continue
            if goldbach:
                r = n % d
            else:
                r = d - 2
            c = np.int64(0)
            a = r
            while a <= n:
                c += flags[a]
                a += d
            total += mus[j] * c
        out[i] = total
    return out


@njit(cache=True)
def count_factor_in_window(vals, spf, lo_sq, hi_sq):
    """Count v in vals such that v+2 has a prime factor q with lo_sq < q*q <= hi_sq."""
    c = 0
    for v in vals:
        m = v + 2
        while m > 1:
            q = spf[m]
            qq = q * q
            if qq > hi_sq:
                break
            if qq > lo_sq:
                c += 1
                break
            while m % q == 0:
                m //= q
    return c


@njit(cache=True)
def count_rough_shifted(vals, spf, hi_sq):
    """Count v in vals such that v+2 has no odd prime factor q with q*q <= hi_sq."""
    c = 0
    for v in vals:
        m = v + 2
        while m % 2 == 0:
            m //= 2
        ok = True
        while m > 1:
            q = spf[m]
            if q * q <= hi_sq:
                ok = False
                break
            while m % q == 0:
                m //= q
        if ok:
            c += 1
    return c
