import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from pairsieve import (
    InsufficientBaseError,
    LimitExceededError,
    OutOfRangeError,
    build_prime_table,
    legendre_count,
    legendre_count_batch,
    prime_pi,
    prime_pi_residue,
    segmented_primes,
)


class TestBuildPrimeTable:
    def test_small_tables_match_trial_division(self):
        t = build_prime_table(10)
        assert [k for k in range(11) if t.is_prime(k)] == [2, 3, 5, 7]

    def test_smallest_valid_table(self):
        t = build_prime_table(2)
        assert t.is_prime(2)
        assert t.prime_pi(2) == 1

    def test_100_has_25_primes(self):
        assert build_prime_table(100).prime_pi(100) == 25

    def test_flags_agree_with_trial_division(self):
        t = build_prime_table(500)
        for k in range(501):
            assert t.is_prime(k) == oracles.is_prime(k), k

    def test_limit_exceeded(self):
        with pytest.raises(LimitExceededError):
            build_prime_table(10**7, max_limit=10**6)

    def test_too_small_limit(self):
        with pytest.raises(ValueError):
            build_prime_table(1)


class TestPrimePi:
    def test_examples(self, table_2k):
        assert prime_pi(table_2k, 10) == 4
        assert prime_pi(table_2k, 1) == 0
        assert prime_pi(table_2k, 100) == 25

    def test_checkpoint_path_equals_full_scan(self, table_100k):
        # checkpoints + local scan vs a full recount of the flag array
        flags = table_100k.prime_flags(100_000)
        cum = np.cumsum(flags.astype(np.int64))
        for n in [0, 1, 2, 3, 65535, 65536, 65537, 99991, 100_000]:
            assert prime_pi(table_100k, n) == int(cum[n])

    def test_nondecreasing(self, table_2k):
        values = [prime_pi(table_2k, n) for n in range(2000)]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_out_of_range(self, table_2k):
        with pytest.raises(OutOfRangeError):
            prime_pi(table_2k, 2001)


class TestPrimePiResidue:
    def test_examples(self, table_2k):
        assert prime_pi_residue(table_2k, 100, 4, 1) == 11
        assert prime_pi_residue(table_2k, 100, 1, 0) == 25
        assert prime_pi_residue(table_2k, 50, 3, 1) == 6  # {7,13,19,31,37,43}

    @given(st.integers(1, 20), st.integers(0, 1000))
    @settings(max_examples=60, deadline=None)
    def test_residue_classes_partition_pi(self, d, n):
        t = build_prime_table(1000)
        total = sum(prime_pi_residue(t, n, d, a) for a in range(d))
        assert total == prime_pi(t, n)

    def test_invalid_residue(self, table_2k):
        with pytest.raises(ValueError):
            prime_pi_residue(table_2k, 100, 4, 4)
        with pytest.raises(ValueError):
            prime_pi_residue(table_2k, 100, 0, 0)


class TestSegmentedPrimes:
    def test_90_to_100(self, table_2k):
        seg = segmented_primes(90, 100, table_2k)
        assert seg.primes().tolist() == [97]

    def test_empty_range(self, table_2k):
        seg = segmented_primes(50, 50, table_2k)
        assert len(seg.flags) == 0

    def test_million_window(self, table_2k):
        seg = segmented_primes(10**6, 10**6 + 100, table_2k)
        got = seg.primes().tolist()
        assert got == [k for k in range(10**6, 10**6 + 100) if oracles.is_prime(k)]
        assert len(got) == 6

    def test_composition_reproduces_table(self, table_10k):
        flags = np.concatenate(
            [segmented_primes(lo, min(lo + 977, 10_000), table_10k).flags
             for lo in range(2, 10_000, 977)]
        )
        expect = table_10k.prime_flags(9_999)[2:].astype(bool)
        assert np.array_equal(flags, expect)

    def test_insufficient_base(self):
        t = build_prime_table(30)
        with pytest.raises(InsufficientBaseError):
            segmented_primes(10**6, 10**6 + 10, t)


class TestLegendreCount:
    def test_examples(self):
        assert legendre_count(30) == 10
        assert legendre_count(4) == 2
        assert legendre_count(10**4) == 1229

    def test_matches_prime_pi_exactly(self, table_2k):
        for n in range(4, 2001):
            assert legendre_count(n) == prime_pi(table_2k, n), n

    def test_batch_agrees_with_single(self):
        batch = legendre_count_batch(3000)
        for n in [4, 5, 100, 1024, 2999, 3000]:
            assert batch[n] == legendre_count(n)

    def test_below_range(self):
        with pytest.raises(ValueError):
            legendre_count(3)
