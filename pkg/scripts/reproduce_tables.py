#!/usr/bin/env python3
"""Re-derive the hyperbolicity table from the built-in catalog.

Prints one row per handlebody-knot with the classifier's verdict next to
the expected one, then the verification summary.  Exits nonzero on any
mismatch.
"""

from __future__ import annotations

import sys

from tritangle import catalog_entries, catalog_verify, classify


def main() -> int:
    print(f"{'name':<20} {'expected':<34} derived")
    print("-" * 78)
    for entry in catalog_entries():
        if entry.decomposition is not None:
            derived = classify(entry.decomposition).summary()
        elif entry.profile is not None:
            derived = "(obstruction profile, see below)"
        else:
            derived = "(stored fact)"
        expected = str(entry.expected) if entry.expected else \
            ", ".join(o.name for o in entry.expected_obstructions)
        print(f"{entry.name:<20} {expected:<34} {derived}")
    report = catalog_verify()
    print("-" * 78)
    print(f"{report.checked} entries checked, {report.mismatches} mismatches")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
