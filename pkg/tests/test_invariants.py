import pytest
from hypothesis import given, strategies as st

from f2invol.errors import InvalidArgument
from f2invol.gf2 import BitMatrix, block_diag
from f2invol.invariants import (
    Charge,
    DDInvariant,
    IProfile,
    alpha,
    charge,
    charge_of_dd,
    check_dd,
    dd_invariant,
    dd_to_profile,
    dickson_D,
    i_profile,
    profile_to_dd,
)
from f2invol.isometries import validate_involution
from f2invol.reference import INTRO_A, TO8_TABLE
from f2invol.spaces import SpaceType, standard_space
from f2invol.verify import i_relation_checks
from conftest import involutions

J2 = BitMatrix.from_lists([[0, 1], [1, 0]])


def test_intro_matrix(to6):
    s = validate_involution(to6, INTRO_A)
    assert dickson_D(s) == 3
    assert dd_invariant(s) == DDInvariant(3, 1, 3, 1)
    assert charge(s) is Charge.POS


def test_identity_dd(to6):
    s = validate_involution(to6, BitMatrix.identity(6))
    assert dd_invariant(s) == DDInvariant(0, 1, 1, 0)
    assert charge(s) is Charge.ZERO


def test_dd_rendering():
    dd = DDInvariant.parse("2130")
    assert dd == DDInvariant(2, 1, 3, 0)
    assert dd.code == "2130"
    assert dd.as_dict() == {"D": 2, "alpha": 1, "Dt": 3, "alphat": 0}
    assert dd.mirrored() == DDInvariant(3, 0, 2, 1)


@pytest.mark.parametrize(
    "code,row",
    [("0110", (128, 0, 0, 0, 128, 0, 0, 0)), ("4141", (16, 48, 64, 64, 0, 64, 16, 0)), ("1001", (128, 0, 0, 128, 0, 0, 0, 128))],
)
def test_i_profile_to8_examples(code, row):
    from f2invol.classify import representatives

    reps = {d.dd.code: s for d, s in representatives("evo", 8)}
    assert tuple(i_profile(reps[code])) == row


@pytest.mark.parametrize("code,row", sorted(TO8_TABLE.items()))
def test_profile_round_trip(code, row):
    dd = DDInvariant.parse(code)
    assert tuple(dd_to_profile(dd, 8)) == row
    assert profile_to_dd(IProfile(*row), 8) == dd


def test_dd_to_profile_rejects_bad_dd():
    with pytest.raises(InvalidArgument):
        dd_to_profile(DDInvariant(2, 0, 2, 0), 8)
    with pytest.raises(InvalidArgument):
        profile_to_dd(IProfile(1, 2, 3, 4, 5, 6, 7, 8), 8)


def test_profile_requires_evo():
    s = validate_involution(standard_space("symp", 2), J2)
    with pytest.raises(InvalidArgument):
        i_profile(s)


def test_symp_dd_duplicated():
    s = validate_involution(standard_space("symp", 4), block_diag(J2, J2))
    d, a, dt, at = dd_invariant(s)
    assert (d, a) == (dt, at) == (2, 1)


@pytest.mark.parametrize("stype,dim", [("evo", 4), ("evo", 6), ("symp", 2), ("symp", 4), ("oddo", 3), ("oddo", 5)])
def test_dd_admissible_everywhere(stype, dim):
    for s in involutions(stype, dim):
        dd = dd_invariant(s)
        check_dd(dd, SpaceType(stype), dim)
        assert 0 <= dd.D <= dim // 2
        if stype != "evo" and dd.D % 2:
            assert dd.alpha == 1


def test_alpha_zero_for_identity():
    assert alpha(validate_involution(standard_space("symp", 4), BitMatrix.identity(4))) == 0


@given(st.sampled_from(involutions("evo", 6)))
def test_i_relations_random_to6(s):
    assert all(i_relation_checks(s).values())


@given(st.sampled_from(involutions("evo", 6)))
def test_mirror_swaps_dd(s):
    from f2invol.isometries import mirror_matrix

    t = validate_involution(s.space, mirror_matrix(s.space, s.matrix))
    assert dd_invariant(t) == dd_invariant(s).mirrored()


def test_charge_of_dd():
    assert charge_of_dd(DDInvariant(1, 1, 2, 1)) is Charge.ZERO
    assert charge_of_dd(DDInvariant(3, 1, 3, 1)) is Charge.POS
    assert charge_of_dd(DDInvariant(1, 0, 0, 1)) is Charge.NEG
