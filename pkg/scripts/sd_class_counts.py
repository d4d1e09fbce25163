"""S_A orbit counts on the symplectic class representatives.

For each Sp(V) representative A, counts C(A)-orbits on H(A) by brute force,
compares with the case prediction, and totals the involution classes of
M_V x| Sp(V).  dim V = 6 takes a few seconds per representative.
"""

import argparse
import time

from f2invol.classify import class_count
from f2invol.spaces import SpaceType
from f2invol.verify import s_a_records, semidirect_class_count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("dims", nargs="*", type=int, default=[2, 4])
    ap.add_argument("--theta", action="store_true", help="also count classes through the theta image (dim V <= 4)")
    args = ap.parse_args()

    for dim in args.dims:
        t0 = time.perf_counter()
        recs = s_a_records(dim)
        print(f"Sp({dim}):")
        for r in recs:
            mark = "" if r["count"] == r["predicted"] else "  MISMATCH"
            print(f"  {r['family']:<5} k={r['k']}  DD {r['dd'].code}  |S_A| = {r['count']} (predicted {r['predicted']}){mark}")
        total = sum(r["count"] for r in recs)
        target = class_count(SpaceType.EVO, dim + 2)
        print(f"  total {total}, 5n+1 = {5 * (dim // 2) + 1}, class_count(evo, {dim + 2}) = {target}")
        if args.theta and dim <= 4:
            print(f"  through theta: {semidirect_class_count(dim)} classes")
        print(f"  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
