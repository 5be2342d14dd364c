#!/usr/bin/env python3
"""Classify the four three-level driver/constraint sparsity splittings:
integrate each randomized (H, F) pair and report whether H(t) stays
constant, recurs periodically, or neither."""

import argparse

from qbrach import catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t-max", type=float, default=50.0)
    ap.add_argument("--dt", type=float, default=1e-3)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    results = catalog.su3_partitions(t_max=args.t_max, dt=args.dt,
                                     seed=args.seed)
    for r in results:
        period = f"{r.period:.7f}" if r.period is not None else "-"
        print(f"pair {r.index}: {r.description}")
        print(f"    classification: {r.classification:9s} "
              f"period: {period:12s} max excursion: {r.max_excursion:.3e}")


if __name__ == "__main__":
    main()
