import pytest
from hypothesis import given, settings, strategies as st

from f2invol.classify import (
    J2,
    M4,
    are_conjugate,
    class_count,
    classify_involution,
    find_conjugator,
    formula_class_count,
    representatives,
    symplectic_transitive_map,
)
from f2invol.errors import InvalidArgument
from f2invol.gf2 import BitMatrix, block_diag
from f2invol.invariants import dd_invariant
from f2invol.isometries import mirror_matrix, validate_involution
from f2invol.reference import INTRO_A, TO6_DD_CODES
from f2invol.spaces import standard_space
from conftest import involutions

I2 = BitMatrix.identity(2)


def test_to6_representatives():
    reps = representatives("evo", 6)
    assert len(reps) == 11
    assert {d.dd.code for d, _ in reps} == set(TO6_DD_CODES)


def test_sp4_representatives():
    mats = [s.matrix for _, s in representatives("symp", 4)]
    assert len(mats) == 4
    for m in (block_diag(J2, I2), block_diag(J2, J2), BitMatrix.identity(4), M4):
        assert m in mats


@pytest.mark.parametrize("stype,dim,count", [("evo", 6, 11), ("evo", 8, 16), ("symp", 10, 8), ("oddo", 7, 5), ("symp", 4, 4)])
def test_class_count(stype, dim, count):
    assert class_count(stype, dim) == count


def test_evo_dim2_edge():
    assert class_count("evo", 2) == len(representatives("evo", 2)) == 2
    assert formula_class_count("evo", 2) == 1


def test_parity():
    with pytest.raises(InvalidArgument):
        representatives("symp", 5)
    with pytest.raises(InvalidArgument):
        class_count("oddo", 4)


@pytest.mark.parametrize("stype,dim", [("evo", 2), ("evo", 4), ("evo", 6), ("evo", 8), ("symp", 2), ("symp", 6), ("oddo", 1), ("oddo", 5), ("oddo", 7)])
def test_representatives_consistent(stype, dim):
    reps = representatives(stype, dim)
    assert len(reps) == class_count(stype, dim)
    assert len({d.key for d, _ in reps}) == len(reps)
    for d, s in reps:
        assert classify_involution(s) == d


def test_classify_examples(to6):
    d = classify_involution(validate_involution(to6, INTRO_A))
    assert (d.family, d.k, d.dd.code) == ("C", 1, "3131")
    d = classify_involution(validate_involution(to6, BitMatrix.identity(6)))
    assert (d.family, d.dd.code) == ("B-mirror", "0110")
    d = classify_involution(validate_involution(to6, block_diag(J2, I2, I2)))
    assert (d.family, d.k, d.dd.code) == ("A", 1, "1121")


def test_conjugacy_examples(to4):
    ij = validate_involution(to4, block_diag(I2, J2))
    ji = validate_involution(to4, block_diag(J2, I2))
    ident = validate_involution(to4, BitMatrix.identity(4))
    assert are_conjugate(ij, ij)
    assert are_conjugate(ij, ji)
    assert not are_conjugate(ident, validate_involution(to4, mirror_matrix(to4, ident.matrix)))
    p = find_conjugator(ij, ji)
    assert p.matrix @ ij.matrix @ p.inverse().matrix == ji.matrix
    assert find_conjugator(ident, validate_involution(to4, block_diag(J2, J2))) is None
    assert find_conjugator(ij, ij) is not None


def test_conjugacy_across_spaces_rejected(to4):
    with pytest.raises(InvalidArgument):
        are_conjugate(
            validate_involution(to4, BitMatrix.identity(4)),
            validate_involution(standard_space("symp", 4), BitMatrix.identity(4)),
        )


@settings(max_examples=40)
@given(st.sampled_from(involutions("evo", 6)), st.sampled_from(involutions("evo", 6)))
def test_are_conjugate_matches_oracle(s, t):
    p = find_conjugator(s, t)
    assert are_conjugate(s, t) == (p is not None)
    if p is not None:
        assert p.matrix @ s.matrix @ p.inverse().matrix == t.matrix


@settings(max_examples=40)
@given(st.sampled_from(involutions("oddo", 5)), st.sampled_from(involutions("oddo", 5)))
def test_are_conjugate_matches_oracle_oddo(s, t):
    assert are_conjugate(s, t) == (find_conjugator(s, t) is not None)


@given(st.integers(1, 63), st.integers(1, 63))
def test_symplectic_transitivity(v, w):
    space = standard_space("symp", 6)
    p = symplectic_transitive_map(space, v, w)
    assert p.apply(v) == w


def test_symplectic_transitivity_errors():
    space = standard_space("symp", 2)
    assert symplectic_transitive_map(space, 1, 2).matrix == J2
    with pytest.raises(InvalidArgument):
        symplectic_transitive_map(space, 0, 1)
    with pytest.raises(InvalidArgument):
        symplectic_transitive_map(standard_space("evo", 2), 1, 2)


def test_descriptor_dict():
    d, s = representatives("evo", 6)[0]
    out = d.as_dict()
    assert out["DD"] == list(dd_invariant(s)) and out["DD_code"] == dd_invariant(s).code
