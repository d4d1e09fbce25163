"""Orthogonal direct sums of spaces and involutions, and the DD calculus for them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidArgument
from .gf2 import BitMatrix, block_diag
from .invariants import Charge, DDInvariant, check_dd, dd_invariant
from .isometries import Involution, validate_involution
from .spaces import BilinearSpace, SpaceType, classify_and_standardize, standard_space

ZERO_E = DDInvariant(0, 0, 0, 0)
ODDO_PAIR_SHIFT = DDInvariant(0, 1, 1, 0)


def direct_sum_space(u: BilinearSpace, w: BilinearSpace) -> BilinearSpace:
    """Block-diagonal Gram; omega and the type are re-derived, not looked up."""
    return BilinearSpace.from_gram(block_diag(u.gram, w.gram))


def direct_sum(s: Involution, t: Involution) -> Involution:
    space = direct_sum_space(s.space, t.space)
    return validate_involution(space, block_diag(s.matrix, t.matrix))


def standardize_involution(s: Involution) -> Involution:
    """The same involution written on the standard space of its type."""
    stype, u = classify_and_standardize(s.space.gram)
    target = standard_space(stype, s.dim)
    return validate_involution(target, u.inverse() @ s.matrix @ u)


def sharp(x, y) -> DDInvariant:
    return DDInvariant(x[0] + y[0], max(x[1], y[1]), x[2] + y[2], max(x[3], y[3]))


def _add(x, y) -> DDInvariant:
    return DDInvariant(*(a + b for a, b in zip(x, y)))


def _sign(dd: DDInvariant) -> int:
    return (dd.Dt > dd.D) - (dd.Dt < dd.D)


# (sign(Dt - D) of the first summand, same for the second) -> third entry of E
_E_TABLE = {(1, 1): -1, (1, -1): 1, (-1, 1): 1, (-1, -1): 2}


def correction_e(s_dd: DDInvariant, t_dd: DDInvariant) -> DDInvariant:
    key = (_sign(s_dd), _sign(t_dd))
    if 0 in key:
        return ZERO_E
    if key not in _E_TABLE:
        raise InternalInconsistency(f"no correction case for {list(s_dd)} and {list(t_dd)}")
    return DDInvariant(0, 0, _E_TABLE[key], 0)


@dataclass(frozen=True)
class SumPrediction:
    case: str
    base: DDInvariant
    correction: DDInvariant
    result: DDInvariant
    stype: SpaceType

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "base": list(self.base),
            "correction": list(self.correction),
            "predicted": list(self.result),
            "space": self.stype.value,
        }


SUM_TYPE = {
    (SpaceType.SYMP, SpaceType.SYMP): SpaceType.SYMP,
    (SpaceType.SYMP, SpaceType.ODDO): SpaceType.ODDO,
    (SpaceType.SYMP, SpaceType.EVO): SpaceType.EVO,
    (SpaceType.ODDO, SpaceType.ODDO): SpaceType.EVO,
    (SpaceType.ODDO, SpaceType.EVO): SpaceType.ODDO,
    (SpaceType.EVO, SpaceType.EVO): SpaceType.EVO,
}


def sum_type(a: SpaceType, b: SpaceType) -> SpaceType:
    return SUM_TYPE.get((a, b)) or SUM_TYPE[(b, a)]


def predict_dd_sum(s_dd, s_type: SpaceType, t_dd, t_type: SpaceType) -> SumPrediction:
    s_dd, t_dd = DDInvariant(*s_dd), DDInvariant(*t_dd)
    check_dd(s_dd, s_type)
    check_dd(t_dd, t_type)
    stype = sum_type(s_type, t_type)
    base = sharp(s_dd, t_dd)
    if SpaceType.SYMP in (s_type, t_type):
        return SumPrediction("a", base, ZERO_E, base, stype)
    if s_type is t_type is SpaceType.ODDO:
        return SumPrediction("b", base, ODDO_PAIR_SHIFT, sharp(base, ODDO_PAIR_SHIFT), stype)
    if s_type is SpaceType.EVO and t_type is SpaceType.ODDO:
        s_dd, t_dd = t_dd, s_dd
        s_type, t_type = t_type, s_type
    if s_type is SpaceType.ODDO:
        d = s_dd.D + t_dd.D
        a = max(s_dd.alpha, t_dd.alphat)
        result = DDInvariant(d, a, d, a)
        return SumPrediction("c", base, DDInvariant(*(r - b for r, b in zip(result, base))), result, stype)
    e = correction_e(s_dd, t_dd)
    return SumPrediction("d", base, e, _add(base, e), stype)


def computed_dd_sum(s: Involution, t: Involution) -> DDInvariant:
    """DD of the block sum, computed after moving it onto the standard space."""
    return dd_invariant(standardize_involution(direct_sum(s, t)))


def charge_product(c1: Charge | int, c2: Charge | int) -> Charge:
    if int(c1) not in (-1, 0, 1) or int(c2) not in (-1, 0, 1):
        raise InvalidArgument("charges lie in {-1, 0, 1}")
    return Charge(int(c1) * int(c2))


def identity_involution(space: BilinearSpace) -> Involution:
    return validate_involution(space, BitMatrix.identity(space.dim))
