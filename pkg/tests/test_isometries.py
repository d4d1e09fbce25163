import pytest
from hypothesis import given

from f2invol import _batch
from f2invol.errors import CapExceeded, InvalidArgument, MirrorUndefined, NotAnInvolution, NotAnIsometry, ShapeError
from f2invol.gf2 import BitMatrix
from f2invol.isometries import (
    enumerate_group,
    enumerate_involutions,
    group_array,
    group_order,
    involution_mask,
    mirror,
    mirror_matrix,
    validate_involution,
    validate_isometry,
)
from f2invol.reference import INTRO_A, INTRO_MIRROR_A
from f2invol.spaces import standard_space
from conftest import group_elements, group_matrices


def test_validate_examples(to6):
    assert validate_isometry(to6, BitMatrix.identity(6)).matrix.is_identity()
    assert validate_involution(to6, INTRO_A).matrix == INTRO_A
    cols = [1 << i for i in range(5)] + [0]
    with pytest.raises(NotAnIsometry):
        validate_isometry(to6, BitMatrix.from_columns(cols, 6))
    with pytest.raises(ShapeError):
        validate_isometry(to6, BitMatrix.identity(5))


def test_non_involution_rejected(to4):
    cycle = BitMatrix.from_columns([0b0010, 0b0100, 0b0001, 0b1000], 4)
    validate_isometry(to4, cycle)
    with pytest.raises(NotAnInvolution):
        validate_involution(to4, cycle)


def test_mirror_examples(to6):
    assert mirror_matrix(to6, BitMatrix.identity(6)) == BitMatrix.ones(6, 6) + BitMatrix.identity(6)
    assert mirror_matrix(to6, INTRO_A) == INTRO_MIRROR_A
    assert mirror(validate_isometry(to6, INTRO_A)).matrix == INTRO_A.complement()
    with pytest.raises(MirrorUndefined):
        mirror_matrix(standard_space("symp", 4), BitMatrix.identity(4))
    with pytest.raises(MirrorUndefined):
        mirror_matrix(standard_space("oddo", 3), BitMatrix.identity(3))


@pytest.mark.parametrize(
    "stype,dim,order",
    [("evo", 2, 2), ("evo", 4, 48), ("evo", 6, 23040), ("oddo", 3, 6), ("oddo", 5, 720), ("symp", 2, 6), ("symp", 4, 720)],
)
def test_orders(stype, dim, order):
    assert group_order(stype, dim) == order
    assert len(group_array(standard_space(stype, dim))) == order


def test_order_parity():
    with pytest.raises(InvalidArgument):
        group_order("evo", 5)


def test_enumeration_is_lexicographic_and_distinct(to4):
    mats = [g.matrix for g in enumerate_group(to4)]
    assert len(set(mats)) == 48
    stack = group_array(to4)
    assert [_batch.to_matrix(r, 4) for r in stack] == mats


def test_enumeration_parts_partition(to4):
    whole = [g.matrix for g in enumerate_group(to4)]
    parts = [g.matrix for i in range(3) for g in enumerate_group(to4, part=(i, 3))]
    assert sorted(parts, key=lambda m: m.rows) == sorted(whole, key=lambda m: m.rows)


def test_involution_counts(to6):
    # permutation involutions of S4 (1 + 6 + 3) and their complements
    assert sum(1 for _ in enumerate_involutions(standard_space("evo", 4))) == 20
    stack = group_array(to6)
    assert int(involution_mask(stack).sum()) == 752


def test_cap_refused():
    with pytest.raises(CapExceeded):
        group_array(standard_space("evo", 8))


def test_fixes_omega():
    space = standard_space("oddo", 5)
    w = space.omega_bits
    assert all(g.apply(w) == w for g in enumerate_group(space))


@given(group_elements("evo", 6), group_elements("evo", 6))
def test_mirror_product_law(a, b):
    space = standard_space("evo", 6)
    assert mirror_matrix(space, a) @ mirror_matrix(space, b) == a @ b


@given(group_elements("evo", 6), group_elements("evo", 6))
def test_mirror_conjugation_law(a, p):
    space = standard_space("evo", 6)
    p_inv = p.T
    assert mirror_matrix(space, p @ a @ p_inv) == p @ mirror_matrix(space, a) @ p_inv


@given(group_elements("oddo", 5), group_elements("oddo", 5))
def test_group_closed(a, b):
    space = standard_space("oddo", 5)
    validate_isometry(space, a @ b)
    assert validate_isometry(space, a).inverse().matrix @ a == BitMatrix.identity(5)


def test_mirror_squares_to_identity_map():
    space = standard_space("evo", 4)
    assert all(mirror_matrix(space, mirror_matrix(space, m)) == m for m in group_matrices("evo", 4))
