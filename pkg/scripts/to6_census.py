"""Census of TO(6): group order, involution count and the DD fibers.

Also checks that the conjugation orbits coincide with the fibers.
    python scripts/to6_census.py [--json]
"""

import argparse
import json
import time

from f2invol.verify import census_to6, orbit_partition_to6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    census = census_to6()
    n_orbits, same = orbit_partition_to6()
    census["orbits"] = n_orbits
    census["orbits_equal_fibers"] = same
    census["seconds"] = round(time.perf_counter() - t0, 2)
    if args.json:
        print(json.dumps(census, indent=2, sort_keys=True))
        return
    print(f"|TO(6)| = {census['elements']}, involutions = {census['involutions']}")
    for code, size in sorted(census["fibers"].items()):
        print(f"  DD {code}: {size}")
    print(f"{n_orbits} conjugation orbits, equal to the DD fibers: {same}  ({census['seconds']}s)")


if __name__ == "__main__":
    main()
