"""Conjugacy invariants of involutions: D, alpha, the DD 4-tuple, I1..I8, charge."""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple, Sequence

from .errors import InvalidArgument
from .gf2 import BitMatrix, dot
from .isometries import Involution, mirror_matrix
from .spaces import BilinearSpace, SpaceType

I_PROFILE_MAX_DIM = 24


class DDInvariant(NamedTuple):
    D: int
    alpha: int
    Dt: int
    alphat: int

    @property
    def code(self) -> str:
        """Compact 4-digit form, e.g. ``"2130"``."""
        return "".join(str(x) for x in self)

    def mirrored(self) -> "DDInvariant":
        return DDInvariant(self.Dt, self.alphat, self.D, self.alpha)

    def as_dict(self) -> dict:
        return {"D": self.D, "alpha": self.alpha, "Dt": self.Dt, "alphat": self.alphat}

    @classmethod
    def parse(cls, value: str | Sequence[int]) -> "DDInvariant":
        if isinstance(value, str):
            value = value.strip().strip("[]")
            parts = value.split(",") if "," in value else list(value)
            value = [int(p) for p in parts]
        if len(value) != 4:
            raise InvalidArgument(f"a DD invariant has 4 entries, got {len(value)}")
        return cls(*(int(v) for v in value))


class IProfile(NamedTuple):
    I1: int
    I2: int
    I3: int
    I4: int
    I5: int
    I6: int
    I7: int
    I8: int

    def as_dict(self) -> dict:
        return {"I": list(self)}


class Charge(IntEnum):
    NEG = -1
    ZERO = 0
    POS = 1


def dickson_D(s: Involution) -> int:
    return (s.matrix + BitMatrix.identity(s.dim)).rank()


def _alpha_matrix(space: BilinearSpace, m: BitMatrix) -> int:
    # v -> b(v, m v) is linear for involutive isometries, so it is nonzero
    # iff it is nonzero on some basis vector: (G m)_ii.
    if space.gram.is_identity():
        return int(m.diagonal_bits() != 0)
    return int((space.gram @ m).diagonal_bits() != 0)


def _alpha_oddo(space: BilinearSpace, m: BitMatrix) -> int:
    perp = space.perp([space.omega_bits])
    return int(any(space.pair(w, m.apply(w)) for w in perp))


def alpha(s: Involution) -> int:
    if s.space.stype is SpaceType.ODDO:
        return _alpha_oddo(s.space, s.matrix)
    return _alpha_matrix(s.space, s.matrix)


def dd_invariant(s: Involution) -> DDInvariant:
    d, a = dickson_D(s), alpha(s)
    if s.space.stype is not SpaceType.EVO:
        return DDInvariant(d, a, d, a)
    mm = mirror_matrix(s.space, s.matrix)
    dt = (mm + BitMatrix.identity(s.dim)).rank()
    return DDInvariant(d, a, dt, _alpha_matrix(s.space, mm))


def charge_of_dd(dd: DDInvariant) -> Charge:
    if dd.Dt > dd.D:
        return Charge.ZERO
    if dd.Dt == dd.D:
        return Charge.POS
    return Charge.NEG


def charge(s: Involution) -> Charge:
    if s.space.stype is not SpaceType.EVO:
        raise InvalidArgument("charge is defined for involutions of EVO spaces only")
    return charge_of_dd(dd_invariant(s))


def i_profile(s: Involution) -> IProfile:
    """Count all 2^dim vectors against the eight defining predicates.

    Vectors are visited in Gray-code order, so ``s v`` and ``G s v`` are
    updated by one XOR per step.
    """
    space = s.space
    n = space.dim
    if space.stype is not SpaceType.EVO:
        raise InvalidArgument("I-invariants are defined for EVO spaces only")
    if n > I_PROFILE_MAX_DIM:
        raise InvalidArgument(f"dim {n} too large for a vector sweep; use dd_to_profile")
    m = s.matrix
    omega = space.omega_bits
    norm_func = space.functional(omega)
    cols = m.columns_bits()
    gcols = (space.gram @ m).columns_bits()
    counts = [0] * 8
    v = sv = gsv = 0
    for step in range(1 << n):
        if step:
            k = (step & -step).bit_length() - 1
            v ^= 1 << k
            sv ^= cols[k]
            gsv ^= gcols[k]
        vv = dot(norm_func, v)
        vsv = dot(v, gsv)
        fixed = v == sv
        if vv:
            if fixed:
                counts[4] += 1
            elif vsv:
                counts[5] += 1
            else:
                counts[3] += 1
        else:
            if fixed:
                counts[0] += 1
            elif vsv:
                counts[2] += 1
            else:
                counts[1] += 1
        if v ^ sv == omega:
            counts[7 if vv else 6] += 1
    return IProfile(*counts)


def check_dd(dd: DDInvariant, stype: SpaceType, dim: int | None = None) -> None:
    """Raise unless ``dd`` is admissible for an involution of that type (and dim, if given)."""
    d, a, dt, at = dd
    if a not in (0, 1) or at not in (0, 1):
        raise InvalidArgument(f"alpha entries must be 0 or 1: {list(dd)}")
    if min(d, dt) < 0 or (dim is not None and max(d, dt) > dim // 2):
        raise InvalidArgument(f"D entries must lie in [0, dim/2]: {list(dd)}")
    if stype is SpaceType.EVO:
        if abs(d - dt) > 1:
            raise InvalidArgument(f"|D - Dt| <= 1 violated: {list(dd)}")
        if a == 0 and at == 0:
            raise InvalidArgument(f"alpha and alphat cannot both vanish: {list(dd)}")
        if max(d, dt) == 0:
            raise InvalidArgument(f"D and Dt cannot both vanish: {list(dd)}")
    elif (d, a) != (dt, at):
        raise InvalidArgument(f"{stype} DD invariants repeat their first pair: {list(dd)}")


def _log2_exact(x: int) -> int:
    if x <= 0 or x & (x - 1):
        raise InvalidArgument(f"{x} is not a power of two")
    return x.bit_length() - 1


def dd_to_profile(dd: DDInvariant, dim: int) -> IProfile:
    dd = DDInvariant(*dd)
    if dim < 2 or dim % 2:
        raise InvalidArgument(f"I-invariants need an even dim >= 2, got {dim}")
    check_dd(dd, SpaceType.EVO, dim)
    d, a, dt, at = dd
    half = 1 << (dim - 1)
    i1 = 1 << (dim - max(d, dt))
    i3 = (1 << (dim - 2)) if a == at else 0
    if a > at:
        i4 = 0
    elif a < at:
        i4 = half
    else:
        i4 = 1 << (dim - 2)
    i5 = (1 << (dim - 1 - d)) if d < dt else 0
    i7 = (1 << (dim - d)) if d == dt else 0
    i8 = (1 << (dim - 1 - dt)) if d > dt else 0
    return IProfile(i1, half - i1 - i3, i3, i4, i5, half - i4 - i5, i7, i8)


def check_profile(p: IProfile, dim: int) -> None:
    p = IProfile(*p)
    half = 1 << (dim - 1)
    if any(x < 0 for x in p):
        raise InvalidArgument("negative count in profile")
    if p.I1 + p.I2 + p.I3 != half or p.I4 + p.I5 + p.I6 != half:
        raise InvalidArgument("profile violates I1+I2+I3 = 2^(dim-1) = I4+I5+I6")
    tail = (p.I5, p.I7, p.I8)
    if any(x not in (0, p.I1) for x in tail) or sum(1 for x in tail if x) > 1:
        raise InvalidArgument("I5, I7, I8 must lie in {0, I1} with at most one nonzero")
    if p.I4 not in (0, 1 << (dim - 2), half):
        raise InvalidArgument(f"I4 = {p.I4} is not 0, 2^(dim-2) or 2^(dim-1)")
    if any(x % p.I1 for x in p):
        raise InvalidArgument("every I_j must be a multiple of I1")


def profile_to_dd(p: IProfile, dim: int) -> DDInvariant:
    p = IProfile(*p)
    if dim < 2 or dim % 2:
        raise InvalidArgument(f"I-invariants need an even dim >= 2, got {dim}")
    check_profile(p, dim)
    d = dim - _log2_exact(p.I1 + p.I5)
    dt = dim - _log2_exact(p.I1 + p.I8)
    a = 0 if p.I4 == 1 << (dim - 1) else 1
    at = 0 if p.I4 == 0 else 1
    return DDInvariant(d, a, dt, at)
