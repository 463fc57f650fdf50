#!/usr/bin/env python3
"""Run the dispatch censuses for all three decomposition kinds.

Writes one CSV per kind into the given directory (default: current) and
prints the branch tallies.
"""

from __future__ import annotations

import argparse
import collections
from pathlib import Path

from tritangle import census_csv, run_census


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-denominator", type=int, default=25)
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for kind in ("tautau", "taurho", "rhorho"):
        rows = run_census(kind, args.max_denominator)
        target = out_dir / f"census_{kind}.csv"
        target.write_text(census_csv(rows), encoding="utf-8", newline="")
        tally = collections.Counter(row.branch for row in rows)
        summary = ", ".join(f"{branch}: {n}" for branch, n in sorted(tally.items()))
        print(f"{kind}: {len(rows)} rows -> {target} ({summary})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
