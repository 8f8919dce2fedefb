"""Check every theorem against exhaustive enumeration and write a CSV report.

    python3 scripts/verify_theorems.py --n-max 8 --c 1 2 --out results/verify.csv
"""

import argparse
import csv
import sys
import time
from collections import Counter
from pathlib import Path

from zagreb_cacti.bounds import Theorem
from zagreb_cacti.enumeration import CSV_HEADER, N_CAP, verify_theorem


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=8, choices=range(3, N_CAP + 1))
    p.add_argument("--c", nargs="+", default=["1", "2"])
    p.add_argument("--out", type=Path)
    p.add_argument("--jobs", type=int, default=None)
    args = p.parse_args()

    rows, tally = [], Counter()
    for t in Theorem:
        start = time.perf_counter()
        reports = verify_theorem(t, args.n_max, args.c, args.jobs)
        for r in reports:
            tally[r.verdict] += 1
            rows.append(r.csv_row())
            if not r.confirmed:
                print(f"  {t.value} n={r.n} k={r.k} c={r.c}: {r.detail}")
        print(f"{t.value}: {sum(r.confirmed for r in reports)}/{len(reports)} confirmed "
              f"in {time.perf_counter() - start:.1f}s")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with args.out.open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(CSV_HEADER)
            w.writerows(rows)
    print(dict(tally))
    return 0 if tally["mismatch"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
