"""The ten acceptance criteria, one test each.

Every test records a ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line; the lines are printed in a dedicated section of the terminal summary.
"""

import time

import pytest

from f2invol.classify import class_count
from f2invol.reference import TO6_DD_CODES, TO6_INVOLUTIONS, TO6_ORDER
from f2invol.spaces import SpaceType
from f2invol.verify import (
    VerifyConfig,
    census_to6,
    orbit_partition_to6,
    run_suite,
    s_a_records,
)
from conftest import ACCEPTANCE_LINES


def record(n: int, passed: bool, detail: str) -> None:
    line = f"{'PASS' if passed else 'FAIL'} criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


def record_suite(n: int, suite: str, **cfg) -> None:
    rep = run_suite(suite, VerifyConfig(**cfg))
    failed = [c.line() for c in rep.checks if not c.passed]
    record(n, rep.passed, rep.summary + ("; " + "; ".join(failed) if failed else ""))


def test_criterion_01_to6_census():
    t0 = time.perf_counter()
    c = census_to6()
    codes = set(c["fibers"])
    ok = c["elements"] == TO6_ORDER and c["involutions"] == TO6_INVOLUTIONS and codes == set(TO6_DD_CODES)
    ok = ok and len(codes) == 11 and sum(c["fibers"].values()) == c["involutions"]
    dt = time.perf_counter() - t0
    record(1, ok and dt < 60, f"{c['elements']} elements, {c['involutions']} involutions, {len(codes)} DD fibers ({dt:.1f}s)")


def test_criterion_02_conjugacy_oracle():
    t0 = time.perf_counter()
    n_orb, same = orbit_partition_to6()
    dt = time.perf_counter() - t0
    record(2, same and n_orb == 11, f"{n_orb} conjugation orbits coincide with DD fibers: {same} ({dt:.1f}s)")


def test_criterion_03_to8_table():
    record_suite(3, "to8-table")


def test_criterion_04_orders():
    record_suite(4, "orders")


def test_criterion_05_mirror_laws():
    record_suite(5, "mirror-laws", seed=0, random_pairs=10_000)


def test_criterion_06_theta_isomorphism():
    record_suite(6, "theta-iso")


def test_criterion_07_s_a_counts():
    recs = s_a_records(4)
    counts = tuple(r["count"] for r in recs)
    labels = ", ".join(f"{r['family']} k={r['k']} -> {r['count']}" for r in recs)
    per_case = all(r["count"] == r["predicted"] for r in recs)
    ident = next(r for r in recs if r["dd"].D == 0)
    total = sum(counts)
    ok = per_case and ident["count"] == 4 and total == 11 == 5 * 2 + 1 == class_count(SpaceType.EVO, 6)
    record(7, ok, f"{labels}; total {total}")


def test_criterion_08_direct_sums():
    t0 = time.perf_counter()
    rep = run_suite("dsum")
    dt = time.perf_counter() - t0
    record(8, rep.passed and dt < 30, f"{rep.summary} ({dt:.1f}s)")


def test_criterion_09_invariant_laws():
    record_suite(9, "i-relations")


@pytest.mark.slow
def test_criterion_10_class_counts():
    rep = run_suite("class-counts")
    edge = next(c for c in rep.checks if c.name.startswith("evo 2 edge"))
    record(10, rep.passed, f"all class counts agree; edge case: {edge.detail}")
