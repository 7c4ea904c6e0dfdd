"""Tabulate observed pair counts against their predicted main terms.

Sweeps n over a geometric ladder and prints one CSV row per point with the
crude and integral-refined ratios.  Useful for eyeballing how quickly the
refined ratio settles near 1 while the crude one drifts.

    python3 scripts/ratio_table.py --kind twin --max-n 1000000
"""

import argparse
import csv
import math
import sys

from pairsieve import build_prime_table, main_term


def ladder(max_n: int, points: int) -> list[int]:
    lo, hi = math.log(100), math.log(max_n)
    ns = set()
    for i in range(points):
        n = round(math.exp(lo + (hi - lo) * i / (points - 1)))
        ns.add(n + (n % 2))
    return sorted(ns)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=("goldbach", "twin"), default="twin")
    ap.add_argument("--max-n", type=int, default=10**6)
    ap.add_argument("--points", type=int, default=12)
    args = ap.parse_args()

    table = build_prime_table(args.max_n + 2)
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "actual", "crude_term", "refined_term", "ratio", "refined_ratio"])
    for n in ladder(args.max_n, args.points):
        rec = main_term(table, n, args.kind)
        writer.writerow([
            rec.n,
            rec.actual,
            f"{rec.main_term:.3f}",
            f"{rec.refined_term:.3f}",
            f"{rec.ratio:.4f}",
            f"{rec.refined_ratio:.4f}",
        ])


if __name__ == "__main__":
    main()
