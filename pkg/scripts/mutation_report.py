"""Run the conformance catalog under each engine mutant and report which checks catch it.

    python scripts/mutation_report.py [--all-checks]
"""

import argparse
import time

from hyperideal import conformance as cf
from hyperideal import mutants


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--all-checks", action="store_true",
                    help="run the whole catalog, not only the recorded targets")
    args = ap.parse_args()
    caught = set()
    for name, m in sorted(mutants.MUTANTS.items()):
        t0 = time.perf_counter()
        got = mutants.failing_checks(name, cf.CATALOG if args.all_checks else None)
        caught |= got
        status = "killed" if got else "SURVIVED"
        print(f"mutant={name} {status} checks={','.join(sorted(got)) or '-'} "
              f"time={time.perf_counter() - t0:.1f}s")
    print(f"checks_with_kills={len(caught)}/{len(cf.CATALOG)}")


if __name__ == "__main__":
    main()
