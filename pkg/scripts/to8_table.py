"""Print the I-profile of every TO(8) class representative next to its DD."""

import argparse

from f2invol.classify import representatives
from f2invol.invariants import dd_to_profile, i_profile
from f2invol.reference import TO8_TABLE


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=8, help="even dimension (the reference table exists for 8 only)")
    args = ap.parse_args()

    header = "DD    family    k  " + " ".join(f"I{i:<4}" for i in range(1, 9))
    print(header)
    bad = 0
    for desc, s in sorted(representatives("evo", args.dim), key=lambda r: r[0].dd.code):
        prof = tuple(i_profile(s))
        flag = ""
        if prof != tuple(dd_to_profile(desc.dd, args.dim)):
            flag = "  <- closed form disagrees"
        elif args.dim == 8 and TO8_TABLE.get(desc.dd.code) != prof:
            flag = "  <- reference row disagrees"
        bad += bool(flag)
        print(f"{desc.dd.code}  {desc.family:<9} {desc.k}  " + " ".join(f"{x:<5}" for x in prof) + flag)
    print(f"{bad} disagreements")


if __name__ == "__main__":
    main()
