"""Exceptional-set scan with the density curve and interval follow-up.

Scans even n <= x for missing representations, prints the exceptional
elements, the x/ln^A x comparison curve, and for each exceptional endpoint
the distance to the nearest even number that does have a representation.

    python3 scripts/scan_experiment.py --kind goldbach --x 1000000 --exponent 5
"""

import argparse

from pairsieve import ScanConfig, build_prime_table, interval_experiment, scan_exceptional


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=("goldbach", "twin"), default="goldbach")
    ap.add_argument("--x", type=int, default=10**6)
    ap.add_argument("--mode", choices=("extended", "strict"), default="extended")
    ap.add_argument("--exponent", type=float, default=5.0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    table = build_prime_table(args.x + 2)
    cfg = ScanConfig(
        x=args.x,
        kind=args.kind,
        mode=args.mode,
        exponent_a=args.exponent,
        worker_count=args.workers,
    )
    report = scan_exceptional(table, cfg)

    print(f"kind={args.kind} mode={args.mode} x={args.x}")
    print(f"exceptional count: {report.count}")
    print(f"elements: {report.elements if report.count <= 50 else report.elements[:50]}")
    print()
    print(f"{'x_i':>10}  {'x_i/ln^A':>14}  {'observed':>8}")
    for xi, bound, observed in report.curve:
        print(f"{xi:>10}  {bound:>14.4f}  {observed:>8}")

    if report.elements:
        print()
        print("interval follow-up from each exceptional endpoint:")
        for m in report.elements:
            exp = interval_experiment(table, cfg, m)
            print(
                f"  M={m}: nearest represented even {exp.result.value} "
                f"at distance {exp.result.distance} "
                f"(bound 2*|E|={2 * exp.exceptional_count}, "
                f"within={exp.within_bound})"
            )


if __name__ == "__main__":
    main()
