"""Command-line interface: deterministic CSV/JSON emission plus run manifests.

Every subcommand writes its outputs into an output directory (flag ``--out``,
falling back to the PAIRSIEVE_OUT environment variable, then ./out) together
with a ``<subcommand>_manifest.json`` recording the parameters, the table
limit, the wall-clock duration, and a sha256 digest of each output file.
Re-running with the same parameters reproduces the output files byte for
byte; only the duration field of the manifest varies.

Exit codes: 0 success, 1 invariant-check failure, 2 usage error.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import os
import time
from pathlib import Path

import click
import numpy as np

from . import __version__
from .exceptional_scan import ScanConfig, interval_experiment, scan_exceptional
from .pair_counts import difference_decomposition, pair_count_record
from .sieve_core import build_prime_table, segmented_primes
from .singular_series import main_term
from .sieve_function import run_axiom_suite

_KIND = click.Choice(["goldbach", "twin"])
_MODE = click.Choice(["strict", "extended"])


def _out_dir(out: str | None) -> Path:
    path = Path(out or os.environ.get("PAIRSIEVE_OUT", "out"))
    path.mkdir(parents=True, exist_ok=True)
    return path


def _fmt(v) -> str:
    """Locale-independent scalar formatting; floats round-trip exactly."""
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def _write_text(path: Path, text: str) -> str:
    data = text.encode("utf-8")
    path.write_bytes(data)
    return hashlib.sha256(data).hexdigest()


def _write_csv(path: Path, header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    return _write_text(path, "\n".join(lines) + "\n")


def _write_json(path: Path, obj) -> str:
    return _write_text(path, json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _write_manifest(
    out: Path,
    subcommand: str,
    params: dict,
    table_limit: int | None,
    started: float,
    digests: dict[str, str],
) -> None:
    manifest = {
        "subcommand": subcommand,
        "parameters": params,
        "table_limit": table_limit,
        "duration_seconds": time.perf_counter() - started,
        "artifact_version": __version__,
        "outputs": digests,
    }
    _write_json(out / f"{subcommand}_manifest.json", manifest)


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Sieve counting for Goldbach representations and twin primes."""


@main.command()
@click.option("--limit", type=int, required=True, help="Table limit N.")
@click.option("--lo", type=int, default=None, help="Segment start (optional).")
@click.option("--hi", type=int, default=None, help="Segment end, exclusive (optional).")
@click.option("--out", type=str, default=None)
def sieve(limit: int, lo: int | None, hi: int | None, out: str | None) -> None:
    """Build a prime table; optionally emit the primes of a segment."""
    started = time.perf_counter()
    directory = _out_dir(out)
    table = build_prime_table(limit)
    digests: dict[str, str] = {}
    summary = {"limit": limit, "prime_count": table.prime_pi(limit)}
    if lo is not None or hi is not None:
        if lo is None or hi is None:
            raise click.UsageError("--lo and --hi must be given together")
        seg = segmented_primes(lo, hi, table)
        digests["segment_primes.txt"] = _write_text(
            directory / "segment_primes.txt",
            "".join(f"{p}\n" for p in seg.primes()),
        )
        summary["segment"] = {"lo": lo, "hi": hi, "prime_count": int(seg.flags.sum())}
    digests["sieve_summary.json"] = _write_json(directory / "sieve_summary.json", summary)
    params = {"limit": limit, "lo": lo, "hi": hi}
    _write_manifest(directory, "sieve", params, limit, started, digests)
    click.echo(f"pi({limit}) = {summary['prime_count']}")


def _emit_rows(
    directory: Path, name: str, fmt: str, header: list[str], rows: list[list]
) -> dict[str, str]:
    if fmt == "csv":
        return {f"{name}.csv": _write_csv(directory / f"{name}.csv", header, rows)}
    payload = [dict(zip(header, row)) for row in rows]
    return {f"{name}.json": _write_json(directory / f"{name}.json", payload)}


@main.command()
@click.option("--kind", type=_KIND, required=True)
@click.option("--n", "ns", type=int, multiple=True, required=True)
@click.option("--mode", type=_MODE, default="extended", show_default=True)
@click.option("--limit", type=int, default=None, help="Table limit (default max n + 2).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=str, default=None)
def count(ns, kind, mode, limit, fmt, out) -> None:
    """Direct, survivor-sum, and union counts for the given even n."""
    started = time.perf_counter()
    directory = _out_dir(out)
    limit = limit or max(ns) + 2
    table = build_prime_table(limit)
    header = ["n", "kind", "mode", "direct", "moebius_survivors", "union_size", "pi_n"]
    rows = []
    for n in sorted(ns):
        rec = pair_count_record(table, n, kind, mode)
        rows.append(
            [rec.n, rec.kind, rec.mode, rec.direct, rec.moebius_survivors, rec.union_size, rec.pi_n]
        )
        if rec.moebius_survivors + rec.union_size != rec.pi_n:
            click.echo(
                f"invariant failure: survivor/union identity violated at n={n}", err=True
            )
            raise SystemExit(1)
    digests = _emit_rows(directory, "count", fmt, header, rows)
    params = {"kind": kind, "mode": mode, "n": sorted(ns), "format": fmt}
    _write_manifest(directory, "count", params, limit, started, digests)
    for row in rows:
        click.echo(",".join(_fmt(v) for v in row))


@main.command()
@click.option("--kind", type=_KIND, required=True)
@click.option("--n", "ns", type=int, multiple=True)
@click.option("--x", type=int, default=None, help="Geometric samples up to x instead of --n.")
@click.option("--limit", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=str, default=None)
def series(ns, kind, x, limit, fmt, out) -> None:
    """Singular-series main terms and observed-count ratios."""
    started = time.perf_counter()
    directory = _out_dir(out)
    if not ns and x is None:
        raise click.UsageError("give --n values or --x for geometric sampling")
    if not ns:
        points = max(2, int(round(4 * math.log10(x / 16))) + 1)
        xs = np.unique(np.rint(np.geomspace(16, x, points)).astype(np.int64))
        ns = tuple(int(v) if v % 2 == 0 else int(v) + 1 for v in xs)
    limit = limit or max(ns) + 2
    table = build_prime_table(limit)
    header = ["n", "kind", "C", "crude_term", "refined_term", "actual", "ratio", "refined_ratio"]
    rows = []
    for n in sorted(set(ns)):
        rec = main_term(table, n, kind)
        rows.append(
            [rec.n, rec.kind, rec.series_value, rec.main_term, rec.refined_term,
             rec.actual, rec.ratio, rec.refined_ratio]
        )
    digests = _emit_rows(directory, "series", fmt, header, rows)
    params = {"kind": kind, "n": sorted(set(ns)), "x": x, "format": fmt}
    _write_manifest(directory, "series", params, limit, started, digests)
    for row in rows:
        click.echo(",".join(_fmt(v) for v in row))


@main.command()
@click.option("--kind", type=_KIND, required=True)
@click.option("--x", type=int, required=True)
@click.option("--mode", type=_MODE, default="extended", show_default=True)
@click.option("--exponent-a", type=float, default=5.0, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--limit", type=int, default=None)
@click.option("--out", type=str, default=None)
def scan(kind, x, mode, exponent_a, workers, limit, out) -> None:
    """Scan (2, x] for exceptional even numbers; emit list and summary."""
    started = time.perf_counter()
    directory = _out_dir(out)
    limit = limit or x + 2
    table = build_prime_table(limit)
    cfg = ScanConfig(x=x, kind=kind, mode=mode, exponent_a=exponent_a, worker_count=workers)
    report = scan_exceptional(table, cfg)
    digests = {}
    digests["scan_exceptional.txt"] = _write_text(
        directory / "scan_exceptional.txt",
        "".join(f"{n}\n" for n in report.elements),
    )
    summary = {
        "x": report.x,
        "kind": report.kind,
        "mode": report.mode,
        "count": report.count,
        "A": report.exponent_a,
        "curve": [[xi, bound, observed] for xi, bound, observed in report.curve],
    }
    digests["scan_summary.json"] = _write_json(directory / "scan_summary.json", summary)
    params = {"kind": kind, "x": x, "mode": mode, "exponent_a": exponent_a, "workers": workers}
    _write_manifest(directory, "scan", params, limit, started, digests)
    click.echo(f"E({x}) = {report.count}: {report.elements}")


@main.command()
@click.option("--n1", type=int, required=True)
@click.option("--n2", type=int, required=True)
@click.option("--mode", type=_MODE, default="extended", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=str, default=None)
def diff(n1, n2, mode, fmt, out) -> None:
    """Decompose the twin-count difference between two even levels."""
    started = time.perf_counter()
    directory = _out_dir(out)
    limit = n1 + 2
    table = build_prime_table(limit)
    rec = difference_decomposition(table, n1, n2, mode)
    fields = [f.name for f in dataclasses.fields(rec)]
    rows = [[getattr(rec, name) for name in fields]]
    digests = _emit_rows(directory, "diff", fmt, fields, rows)
    params = {"n1": n1, "n2": n2, "mode": mode, "format": fmt}
    _write_manifest(directory, "diff", params, limit, started, digests)
    click.echo(",".join(_fmt(v) for v in rows[0]))
    if not (rec.diff_nonneg and rec.diff_below_width):
        click.echo("invariant failure: count difference outside [0, n1-n2)", err=True)
        raise SystemExit(1)


@main.group()
def verify() -> None:
    """Property-suite runners."""


@verify.command("axioms")
@click.option("--cases", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--out", type=str, default=None)
def verify_axioms(cases, seed, out) -> None:
    """Randomized check of the four sieve-count laws."""
    started = time.perf_counter()
    directory = _out_dir(out)
    result = run_axiom_suite(cases, seed)
    summary = {
        "cases": result.cases,
        "seed": result.seed,
        "failures": result.failures,
        "increment_equalities": result.strict_equalities,
        "ok": result.ok,
    }
    digests = {"axioms_summary.json": _write_json(directory / "axioms_summary.json", summary)}
    _write_manifest(directory, "verify_axioms", {"cases": cases, "seed": seed}, None, started, digests)
    for name, count_ in result.failures.items():
        click.echo(f"{name}: {'ok' if count_ == 0 else f'{count_} failures'} ({cases} cases)")
    click.echo(f"increment equality occurred {result.strict_equalities} times (allowed)")
    if not result.ok:
        bad = [k for k, v in result.failures.items() if v]
        click.echo(f"invariant failure: {', '.join(bad)}", err=True)
        raise SystemExit(1)


if __name__ == "__main__":
    main()
