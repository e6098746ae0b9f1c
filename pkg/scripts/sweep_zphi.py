"""Exhaustive sweep over Z_phi rings: quasi vs S-prime radical, class chain, radical modes.

    python scripts/sweep_zphi.py --max-n 8 --max-phi 3 --max-mcs 4
"""

import argparse
import time
from collections import Counter

from hyperideal import classify as cl
from hyperideal import ideals as idl
from hyperideal import structures as st
from hyperideal.core import fmt_set

CHAIN = [("s_prime", "s_primary"), ("s_primary", "quasi"),
         ("quasi", "weakly_quasi"), ("strongly_quasi", "quasi")]


def sweep(max_n, max_phi, max_mcs):
    stats, bad = Counter(), []
    for G in st.zphi_rings(max_n, max_phi):
        zero = idl.zero_ideal(G)
        zero_c = idl.is_c_hyperideal(G, zero)
        mcs = cl.enumerate_mcs(G, max_mcs)
        stats["rings"] += 1
        for A in idl.enumerate_hyperideals(G):
            c = idl.is_c_hyperideal(G, A)
            primes, powers = idl.radical(G, A, "primes"), idl.radical(G, A, "powers")
            if (primes != powers) if c else bool(powers & ~primes):
                bad.append(("radical", G.name, fmt_set(A), "-"))
            if not c:
                continue
            for S in mcs:
                if A & S:
                    continue
                stats["pairs"] += 1
                h = {k: cl.class_result(G, A, S, k).holds for k in cl.CLASSES}
                stats.update(k for k, v in h.items() if v)
                where = (G.name, fmt_set(A), fmt_set(S))
                if h["quasi"] != cl.is_s_prime(G, primes, S):
                    bad.append(("quasi-iff-radical-s-prime",) + where)
                if any(h[a] and not h[b] for a, b in CHAIN):
                    bad.append(("chain",) + where)
                if zero_c and h["weakly_quasi"] and not h["quasi"] and idl.ideal_product(G, A, A) != zero:
                    bad.append(("weak-square-nonzero",) + where)
    return stats, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-phi", type=int, default=3)
    ap.add_argument("--max-mcs", type=int, default=4)
    args = ap.parse_args()
    t0 = time.perf_counter()
    stats, bad = sweep(args.max_n, args.max_phi, args.max_mcs)
    for k in sorted(stats):
        print(f"{k}={stats[k]}")
    for row in bad:
        print("violation", *row)
    print(f"violations={len(bad)} time={time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
