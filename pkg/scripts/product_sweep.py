"""Check T_CART and T_CART_SQ on every product of two Z_phi rings (up to x -> cx).

    python scripts/product_sweep.py --max-product 36
"""

import argparse
import time
from collections import Counter
from itertools import product

from hyperideal import classify as cl
from hyperideal import conformance as cf
from hyperideal import core
from hyperideal import ideals as idl
from hyperideal import structures as st


def c_ideals(G):
    return [A for A in idl.enumerate_hyperideals(G) if idl.is_c_hyperideal(G, A)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-phi", type=int, default=3)
    ap.add_argument("--max-product", type=int, default=36)
    args = ap.parse_args()
    t0 = time.perf_counter()
    rings = st.zphi_rings(args.max_n, args.max_phi, up_to_iso=True)
    counts, fails = Counter(), []
    n_pairs = 0
    for i, L in enumerate(rings):
        for R in rings[i:]:
            if L.n * R.n > args.max_product:
                continue
            n_pairs += 1
            P = core.direct_product(L, R)
            for A1, A2, S1, S2 in product(c_ideals(L), c_ideals(R),
                                          cl.enumerate_mcs(L, 4), cl.enumerate_mcs(R, 4)):
                inst = cf.Instance(P, core.product_mask(L, R, A1, A2),
                                   core.product_mask(L, R, S1, S2), factors=(L, A1, S1, R, A2, S2))
                for cid in ("T_CART", "T_CART_SQ"):
                    out = cf.run_check(cid, inst)
                    counts[cid, out.status] += 1
                    if out.status == "fail":
                        fails.append((cid, P.name, out.detail))
    print(f"rings={len(rings)} pairs={n_pairs}")
    for (cid, status), k in sorted(counts.items()):
        print(f"check={cid} {status}={k}")
    for row in fails[:20]:
        print("fail", *row)
    print(f"fails={len(fails)} time={time.perf_counter() - t0:.0f}s")


if __name__ == "__main__":
    main()
