import math

import pytest

import oracles
from pairsieve import (
    LimitExceededError,
    ScanConfig,
    bound_curve,
    build_prime_table,
    interval_experiment,
    scan_exceptional,
    scan_goldbach_exceptional,
    scan_twin_exceptional,
)


class TestGoldbachScan:
    def test_x_100(self, table_10k):
        rep = scan_goldbach_exceptional(table_10k, ScanConfig(x=100, kind="goldbach"))
        assert rep.elements == [4]
        assert rep.count == 1

    def test_x_4(self, table_10k):
        rep = scan_goldbach_exceptional(table_10k, ScanConfig(x=4, kind="goldbach"))
        assert rep.elements == [4]

    def test_agrees_with_full_enumeration(self, table_10k):
        rep = scan_goldbach_exceptional(table_10k, ScanConfig(x=10_000, kind="goldbach"))
        assert rep.elements == oracles.goldbach_exceptional_upto(10_000)

    def test_resource_limit(self, table_10k):
        with pytest.raises(LimitExceededError):
            scan_goldbach_exceptional(
                table_10k, ScanConfig(x=10_000, kind="goldbach", max_x=1000)
            )

    def test_observed_count_nondecreasing_in_x(self, table_10k):
        rep = scan_goldbach_exceptional(table_10k, ScanConfig(x=10_000, kind="goldbach"))
        observed = [obs for _, _, obs in rep.curve]
        assert observed == sorted(observed)


class TestTwinScan:
    def test_extended_empty(self, table_10k):
        rep = scan_twin_exceptional(table_10k, ScanConfig(x=10_000, kind="twin"))
        assert rep.elements == []

    def test_strict_only_four(self, table_10k):
        rep = scan_twin_exceptional(
            table_10k, ScanConfig(x=10_000, kind="twin", mode="strict")
        )
        assert rep.elements == [4]

    def test_x_4_strict(self, table_10k):
        rep = scan_twin_exceptional(table_10k, ScanConfig(x=4, kind="twin", mode="strict"))
        assert rep.elements == [4]

    def test_matches_per_n_counts(self, table_2k):
        from pairsieve import count_twin

        for mode in ("strict", "extended"):
            rep = scan_twin_exceptional(table_2k, ScanConfig(x=1500, kind="twin", mode=mode))
            expect = [n for n in range(4, 1501, 2) if count_twin(table_2k, n, mode) == 0]
            assert rep.elements == expect


class TestDeterminism:
    def test_worker_counts_agree(self, table_10k):
        reports = [
            scan_exceptional(
                table_10k,
                ScanConfig(x=10_000, kind="goldbach", worker_count=w, segment_size=512),
            )
            for w in (1, 4, 16)
        ]
        assert reports[0].elements == reports[1].elements == reports[2].elements
        assert reports[0].curve == reports[1].curve == reports[2].curve


class TestBoundCurve:
    def test_direct_formula_value(self):
        # 10^6 / ln^5(10^6) evaluates to about 1.987
        pts = dict(bound_curve(10**6, 5.0, 3))
        assert pts[10**6] == pytest.approx(10**6 / math.log(10**6) ** 5)
        assert pts[10**6] == pytest.approx(1.9869, rel=1e-3)

    def test_monotone_in_exponent(self):
        x = 10**6
        values = [bound_curve(x, a, 2)[-1][1] for a in (1.0, 2.0, 5.0, 8.0)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_geometric_spacing(self):
        pts = [xi for xi, _ in bound_curve(10**6, 5.0, 20)]
        assert pts[0] == 16 and pts[-1] == 10**6
        assert pts == sorted(pts)

    def test_rejects_small_x(self):
        with pytest.raises(ValueError):
            bound_curve(8, 5.0, 3)


class TestIntervalExperiment:
    def test_goldbach_from_exceptional_endpoint(self, table_10k):
        exp = interval_experiment(table_10k, ScanConfig(x=10_000, kind="goldbach"), M=4)
        assert exp.exceptional_count == 1
        assert exp.result.found and exp.result.value == 6 and exp.result.distance == 2
        assert exp.within_bound

    def test_non_exceptional_start_distance_zero(self, table_10k):
        exp = interval_experiment(table_10k, ScanConfig(x=10_000, kind="goldbach"), M=100)
        assert exp.result.distance == 0

    def test_twin_extended_always_zero_distance(self, table_10k):
        exp = interval_experiment(table_10k, ScanConfig(x=10_000, kind="twin"), M=500)
        assert exp.exceptional_count == 0
        assert exp.result.distance == 0
