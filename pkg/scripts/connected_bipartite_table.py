#!/usr/bin/env python3
"""Connected spanning subgraphs of K_{m,n}: log of sum 2^{mn} x^m y^n/(m! n!), checked by edge-subset enumeration.

    python scripts/connected_bipartite_table.py --cap 6
"""

import argparse

from graphcomp.egf import Egf
from graphcomp.oracle import connected_bipartite_bruteforce


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=6)
    ap.add_argument("--brute-edges", type=int, default=16, help="brute-force check when m*n <= this")
    args = ap.parse_args()

    caps = (args.cap, args.cap)
    connected = Egf.from_function(caps, lambda m, n: 1 << (m * n)).log()
    width = len(str(connected[args.cap, args.cap])) + 1
    print("m\\n" + "".join(f"{n:>{width}}" for n in range(args.cap + 1)))
    mismatches = []
    for m in range(args.cap + 1):
        print(f"{m:>3}" + "".join(f"{connected[m, n]:>{width}}" for n in range(args.cap + 1)))
        for n in range(args.cap + 1):
            if (m or n) and m * n <= args.brute_edges:
                if connected_bipartite_bruteforce(m, n, max_edges=args.brute_edges) != connected[m, n]:
                    mismatches.append((m, n))
    print("brute force agrees" if not mismatches else f"mismatch at {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
