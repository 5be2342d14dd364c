#!/usr/bin/env python3
"""Run every verification sweep (gates, special, catalog) and print the
combined report, separating passing checks from reported-only
discrepancies."""

import sys

from qbrach import report


def main():
    env = report.run_suite("all")
    width = max(len(r.id) for r in env.records) + 2
    for status in ("pass", "fail", "reported-only"):
        group = [r for r in env.records if r.status == status]
        if not group:
            continue
        print(f"--- {status} ({len(group)}) ---")
        for r in group:
            tol = "" if r.tolerance is None else f"  (tol {r.tolerance:g})"
            print(f"  {r.id:{width}s} {r.residual:.3e}{tol}")
    return 1 if env.has_failures() else 0


if __name__ == "__main__":
    sys.exit(main())
