#!/usr/bin/env python3
"""Run the polar-degree-2 searches at desk scale.

Enumerates all catalog germ multisets with the right total Milnor number for
each requested (n, d) pair and prints the survivors.  The two
high-dimensional pairs (4,3) and (5,3) come out empty; the low ones reproduce
the known candidate lists.

The default pair set covers the cases where exhaustion is cheap and
informative.  The remaining k=2 region pairs, (3,4) and the plane curves of
degree 6 and up, have target Milnor numbers around 80-100: their enumeration
trees are far beyond desk scale, and semicontinuity alone says little there
(the necessary condition admits many candidates that no curve realises), so
they are not searched by default.  Pass explicit pairs to try one anyway.
"""

from __future__ import annotations

import argparse
import time

from specpol import enumerate_configurations

DEFAULT_PAIRS = [(2, 3), (2, 4), (2, 5), (3, 3), (4, 3), (5, 3)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("pairs", nargs="*", metavar="n,d",
                        help="pairs to search, e.g. 5,3 (default: the desk-scale set)")
    parser.add_argument("-k", type=int, default=2, help="polar degree (default 2)")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    if args.pairs:
        pairs = [tuple(int(x) for x in p.split(",")) for p in args.pairs]
    else:
        pairs = DEFAULT_PAIRS
    for n, d in pairs:
        t0 = time.time()
        report = enumerate_configurations(n, d, args.k, workers=args.workers)
        elapsed = time.time() - t0
        print(f"(n={n}, d={d}, k={args.k})  target mu = {report.target_mu}  "
              f"[{elapsed:.2f}s]")
        print(f"  examined {report.examined}, pruned "
              + ", ".join(f"{name}={count}" for name, count in report.pruned_by))
        for label, deg in report.diagnostic_windows:
            print(f"  target degree over {label}: {deg}")
        if report.survivors:
            print(f"  {len(report.survivors)} candidate configurations:")
            for config in report.survivors:
                print(f"    {config}")
        else:
            print("  no candidate configurations (eliminated)")
        print()


if __name__ == "__main__":
    main()
