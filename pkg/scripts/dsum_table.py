"""Predicted versus computed DD for direct sums of class representatives."""

import argparse
from collections import Counter

from f2invol.verify import dsum_records


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", action="store_true", help="print every pair, not just the per-cell summary")
    args = ap.parse_args()

    recs = dsum_records()
    cells: Counter = Counter()
    bad: Counter = Counter()
    for r in recs:
        cell = " + ".join(t.value for t in r["types"])
        cells[cell] += 1
        ok = r["prediction"].result == r["computed"]
        bad[cell] += not ok
        if args.show or not ok:
            p = r["prediction"]
            print(f"{cell:<12} {r['s'].code} + {r['t'].code}  case {p.case}  -> {p.result.code}  computed {r['computed'].code}")
    for cell in sorted(cells):
        print(f"{cell:<12} {cells[cell]:>5} pairs, {bad[cell]} mismatches")
    print(f"total {len(recs)} pairs, {sum(bad.values())} mismatches")


if __name__ == "__main__":
    main()
