import pytest
from hypothesis import given, strategies as st

from f2invol.classify import J2, representatives
from f2invol.dsum import (
    charge_product,
    computed_dd_sum,
    correction_e,
    direct_sum,
    identity_involution,
    predict_dd_sum,
    sharp,
    sum_type,
)
from f2invol.errors import InvalidArgument
from f2invol.gf2 import BitMatrix, block_diag
from f2invol.invariants import Charge, DDInvariant, charge, charge_of_dd, dd_invariant
from f2invol.isometries import validate_involution
from f2invol.spaces import SpaceType, standard_space

EVO, ODDO, SYMP = SpaceType.EVO, SpaceType.ODDO, SpaceType.SYMP
DD = DDInvariant.parse
REPS = [s for t, dims in ((SYMP, (2, 4)), (ODDO, (1, 3, 5)), (EVO, (2, 4))) for d in dims for _, s in representatives(t, d)]


def test_sharp_examples():
    assert sharp(DD("0000"), DD("1121")) == DD("1121")
    assert sharp(DD("1121"), DD("1001")) == DD("2121")
    assert sharp(DD("3131"), DD("0110")) == DD("3141")


def test_prediction_examples():
    assert predict_dd_sum(DD("0000"), SYMP, DD("0110"), EVO).result == DD("0110")
    p = predict_dd_sum(DD("0110"), EVO, DD("1001"), EVO)
    assert p.correction == DD("0010") and p.result == DD("1121")
    p = predict_dd_sum(DD("1001"), EVO, DD("1001"), EVO)
    assert p.correction == DD("0020") and p.result == DD("2021")
    assert predict_dd_sum(DD("0000"), ODDO, DD("0000"), ODDO).result == DD("0110")


def test_prediction_rejects_bad_dd():
    with pytest.raises(InvalidArgument):
        predict_dd_sum(DD("1021"), SYMP, DD("0110"), EVO)


def test_block_examples():
    evo2 = standard_space("evo", 2)
    i2 = identity_involution(evo2)
    j2 = validate_involution(evo2, J2)
    assert direct_sum(i2, j2).matrix == block_diag(BitMatrix.identity(2), J2)
    assert direct_sum(i2, i2).matrix.is_identity()
    one = identity_involution(standard_space("oddo", 1))
    assert direct_sum(one, one).space.stype is EVO
    assert computed_dd_sum(one, one) == DD("0110")
    mj = validate_involution(evo2, BitMatrix.identity(2).complement())
    assert computed_dd_sum(mj, mj) == DD("2021")


def test_type_chart():
    assert sum_type(SYMP, SYMP) is SYMP
    assert sum_type(SYMP, ODDO) is ODDO and sum_type(EVO, SYMP) is EVO
    assert sum_type(ODDO, ODDO) is EVO
    assert sum_type(ODDO, EVO) is ODDO
    assert sum_type(EVO, EVO) is EVO


@given(st.sampled_from(REPS), st.sampled_from(REPS))
def test_prediction_matches_computation(s, t):
    pred = predict_dd_sum(dd_invariant(s), s.space.stype, dd_invariant(t), t.space.stype)
    assert pred.result == computed_dd_sum(s, t)
    assert pred.stype is sum_type(s.space.stype, t.space.stype)


def test_charge_examples():
    assert charge_product(Charge.POS, Charge.NEG) is Charge.NEG
    assert all(charge_product(Charge.ZERO, c) is Charge.ZERO for c in Charge)


def test_charge_multiplicative_to4():
    evo = [s for d in (2, 4) for _, s in representatives("evo", d)]
    for s in evo:
        for t in evo:
            assert charge_of_dd(computed_dd_sum(s, t)) is charge_product(charge(s), charge(t))


def test_correction_table():
    zero = DDInvariant(0, 0, 0, 0)
    assert correction_e(DD("0110"), DD("1001")) == DD("0010")
    assert correction_e(DD("1001"), DD("0110")) == DD("0010")
    assert correction_e(DD("0110"), DD("0110")) == DDInvariant(0, 0, -1, 0)
    assert correction_e(DD("1001"), DD("1001")) == DD("0020")
    assert correction_e(DD("3131"), DD("1001")) == zero
    assert correction_e(DD("0110"), DD("3131")) == zero
