"""Tabulate the indecomposable census against the counting recurrence.

Each row is enumerated from scratch, so the table doubles as a timing
probe: wall-clock per n shows where exhaustive streaming stops being
practical and parallel shards start paying off.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from indematch import census


@dataclass(frozen=True)
class Config:
    n_max: int
    jobs: int
    markdown: bool
    allow_large: bool


def parse_args(argv: list[str] | None = None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", "--n-max", type=int, default=7, help="largest n (default 7)")
    parser.add_argument("-j", "--jobs", type=int, default=1, help="parallel shards per row")
    parser.add_argument("--markdown", action="store_true", help="emit a markdown table")
    parser.add_argument(
        "--allow-large", action="store_true", help="lift the soft size cap past n=9"
    )
    args = parser.parse_args(argv)
    return Config(args.n_max, args.jobs, args.markdown, args.allow_large)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    if cfg.markdown:
        print("| n | total | indecomposable | recurrence | match | seconds |")
        print("|--:|--:|--:|--:|:--|--:|")
    else:
        print(f"{'n':>2}  {'total':>12}  {'indecomposable':>14}  {'recurrence':>12}  "
              f"{'match':<5}  {'seconds':>8}")
    for n in range(1, cfg.n_max + 1):
        start = time.perf_counter()
        row = census(n, jobs=cfg.jobs, allow_large=cfg.allow_large)
        elapsed = time.perf_counter() - start
        match = "yes" if row.matches_recurrence else "NO"
        if cfg.markdown:
            print(f"| {row.n} | {row.total} | {row.indecomposable} | "
                  f"{row.recurrence_value} | {match} | {elapsed:.2f} |")
        else:
            print(f"{row.n:>2}  {row.total:>12}  {row.indecomposable:>14}  "
                  f"{row.recurrence_value:>12}  {match:<5}  {elapsed:>8.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
