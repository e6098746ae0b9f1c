"""Seeded fuzz run with per-source generation statistics.

    python scripts/fuzz.py --seed 1 --count 200 --workers 4
"""

import argparse
import time

from hyperideal import conformance as cf


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--dump-dir")
    args = ap.parse_args()
    t0 = time.perf_counter()
    stats = {}
    insts = cf.generate_structures(args.seed, args.count, stats=stats)
    print(" ".join(f"{k}={v}" for k, v in sorted(stats.items())))
    summary = cf.run_all(insts, workers=args.workers, dump_dir=args.dump_dir)
    print(summary.text(), end="")
    print(f"time={time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
