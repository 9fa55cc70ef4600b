#!/usr/bin/env python3
"""Tabulate the finite candidate (n, d) regions for a range of polar degrees."""

from __future__ import annotations

import argparse
from collections import Counter

from specpol import candidate_region


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=10)
    args = parser.parse_args()

    for k in range(2, args.k_max + 1):
        region = candidate_region(k)
        by_reason = Counter(by for _, _, by in region.exclusion_log)
        n_values = sorted({n for n, _ in region.pairs})
        d_max = max(d for _, d in region.pairs)
        print(f"k={k}: {len(region.pairs)} pairs, n in {n_values[0]}..{n_values[-1]}, "
              f"d <= {d_max}; exclusions: {dict(sorted(by_reason.items()))}")
        if k == 2:
            print(f"  pairs: {sorted(region.pairs)}")


if __name__ == "__main__":
    main()
