#!/usr/bin/env python3
"""Run every cross-checking benchmark suite and write one CSV per suite.

Usage: python scripts/run_benchmarks.py [output-dir]

Exits nonzero if any suite finds a disagreement between its two routes.
"""

import sys
import time
from pathlib import Path

from dicolor.bench import SUITE_NAMES, rows_to_csv, run_suite


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("bench-results")
    out_dir.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for name in SUITE_NAMES:
        start = time.perf_counter()
        result = run_suite(name)
        elapsed = time.perf_counter() - start
        csv_path = out_dir / f"{name}.csv"
        csv_path.write_text(rows_to_csv(result.rows))
        status = "ok" if result.ok else f"DISAGREEMENT: {result.message}"
        print(f"{name:24s} {len(result.rows):5d} rows  {elapsed:6.1f}s  {status}")
        if not result.ok:
            all_ok = False
            if result.offending is not None:
                offending = out_dir / f"{name}.offending"
                offending.write_text(result.offending)
                print(f"  offending instance -> {offending}")
    return 0 if all_ok else 3


if __name__ == "__main__":
    sys.exit(main())
