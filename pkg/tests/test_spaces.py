import pytest
from hypothesis import given, strategies as st

from f2invol.errors import InvalidArgument
from f2invol.gf2 import BitMatrix, block_diag
from f2invol.spaces import (
    BilinearSpace,
    SemiNorm,
    SpaceType,
    classify_and_standardize,
    semi_norm_standard,
    standard_gram,
    standard_space,
    symplectic_basis,
)

ALL_STANDARD = [(SpaceType.SYMP, d) for d in (2, 4, 6, 8)] + [
    (t, d) for t in (SpaceType.EVO, SpaceType.ODDO) for d in range(1, 9) if (d % 2 == 0) == (t is SpaceType.EVO)
]


def test_standard_omegas():
    assert standard_space("evo", 6).omega_bits == 0b111111
    assert standard_space("symp", 4).omega_bits == 0
    oddo = standard_space("oddo", 3)
    assert oddo.norm(oddo.omega_bits) == 1


@pytest.mark.parametrize("stype,dim", [("symp", 3), ("oddo", 4), ("evo", 3), ("evo", 0)])
def test_parity_errors(stype, dim):
    with pytest.raises(InvalidArgument):
        standard_space(stype, dim)


@pytest.mark.parametrize("stype,dim", ALL_STANDARD)
def test_omega_characterization(stype, dim):
    space = standard_space(stype, dim)
    w = space.omega_bits
    assert all(space.pair(w, v) == space.pair(v, v) for v in range(1 << dim))


def test_classify_examples():
    assert classify_and_standardize(BitMatrix.identity(3)) == (SpaceType.ODDO, BitMatrix.identity(3))
    j = BitMatrix.from_lists([[0, 1], [1, 0]])
    assert classify_and_standardize(j) == (SpaceType.SYMP, BitMatrix.identity(2))
    g = BitMatrix.from_lists([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    stype, u = classify_and_standardize(g)
    assert stype is SpaceType.ODDO
    assert u.T @ g @ u == BitMatrix.identity(3)
    assert sorted(u.columns_bits()) == sorted([0b011, 0b101, 0b111])


def test_degenerate_gram_rejected():
    with pytest.raises(InvalidArgument):
        classify_and_standardize(BitMatrix.ones(2, 2))


@st.composite
def nondegenerate_grams(draw):
    n = draw(st.integers(1, 8))
    for _ in range(50):
        rows = [0] * n
        for i in range(n):
            for j in range(i, n):
                if draw(st.booleans()):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        g = BitMatrix.from_rows(rows, n)
        if g.inverse() is not None:
            return g
    return BitMatrix.identity(n)


@given(nondegenerate_grams())
def test_standardization_is_congruence(g):
    stype, u = classify_and_standardize(g)
    assert u.inverse() is not None
    assert u.T @ g @ u == standard_gram(stype, g.nrows)
    assert BilinearSpace.from_gram(g).stype is stype


@given(nondegenerate_grams())
def test_omega_on_random_spaces(g):
    space = BilinearSpace.from_gram(g)
    w = space.omega_bits
    assert all(space.pair(w, v) == space.norm(v) == space.pair(v, v) for v in range(1 << g.nrows))


def test_semi_norm_examples():
    q = semi_norm_standard(standard_space("symp", 4))
    assert q(0) == 0
    assert q(0b0001) == 0 and q(0b0011) == 1
    space = q.space
    assert all(q(v ^ w) == q(v) ^ q(w) ^ space.pair(v, w) for v in range(16) for w in range(16))


def test_semi_norm_requires_symplectic():
    with pytest.raises(InvalidArgument):
        SemiNorm(standard_space("evo", 4))


@pytest.mark.parametrize("dim", [2, 4, 6])
def test_semi_norm_torsor(dim):
    space = standard_space("symp", dim)
    q = SemiNorm(space)
    for linear in (1, (1 << dim) - 1, 0b101 & ((1 << dim) - 1)):
        q2 = q.shifted(linear)
        diff = [q(v) ^ q2(v) for v in range(1 << dim)]
        assert all(diff[v ^ w] == diff[v] ^ diff[w] for v in range(1 << dim) for w in range(1 << dim))


@pytest.mark.parametrize("first", range(1, 16))
def test_symplectic_basis_extends(first):
    space = standard_space("symp", 4)
    basis = symplectic_basis(space, first)
    assert basis[0] == first
    u = BitMatrix.from_columns(basis, 4)
    assert u.T @ space.gram @ u == space.gram


def test_direct_sum_gram_types():
    h = standard_gram(SpaceType.SYMP, 2)
    one = BitMatrix.identity(1)
    assert BilinearSpace.from_gram(block_diag(one, h)).stype is SpaceType.ODDO
    assert BilinearSpace.from_gram(block_diag(one, one)).stype is SpaceType.EVO
