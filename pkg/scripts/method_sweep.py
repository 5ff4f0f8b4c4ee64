#!/usr/bin/env python3
"""Tabulate C(K_{m,n}) by closed form, EGF extraction and brute force, flagging any disagreement.

    python scripts/method_sweep.py --max-total 9
"""

import argparse
import time

from graphcomp.bipartite import count_bipartite, count_bipartite_via_egf
from graphcomp.oracle import complete_bipartite, count_compositions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-total", type=int, default=9, help="sweep all m + n <= this")
    ap.add_argument("--oracle-limit", type=int, default=10, help="skip brute force above this many vertices")
    args = ap.parse_args()

    print(f"{'m':>3} {'n':>3} {'formula':>14} {'egf':>14} {'oracle':>14}  ok")
    bad = 0
    t0 = time.time()
    for total in range(args.max_total + 1):
        for m in range(total + 1):
            n = total - m
            a = count_bipartite(m, n)
            b = count_bipartite_via_egf(m, n)
            c = count_compositions(complete_bipartite(m, n)) if total <= args.oracle_limit else None
            ok = a == b and (c is None or c == a)
            bad += not ok
            print(f"{m:>3} {n:>3} {a:>14} {b:>14} {'-' if c is None else c:>14}  {'yes' if ok else 'NO'}")
    print(f"{bad} disagreements, {time.time() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
