"""Canonical representatives and conjugacy classification of involutions.

EVO classes are keyed by the full DD invariant, SYMP and ODDO classes by
``(D, alpha)``.  :func:`involution_orbits` and :func:`find_conjugator` are the
brute-force oracles that never look at invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _batch
from .errors import InternalInconsistency, InvalidArgument
from .gf2 import BitMatrix, BitVector, block_diag
from .invariants import DDInvariant, dd_invariant
from .isometries import (
    Involution,
    Isometry,
    _trusted_involution,
    group_array,
    involution_mask,
    validate_involution,
    validate_isometry,
)
from .spaces import (
    BilinearSpace,
    SpaceType,
    check_parity,
    hyperbolic_pairs,
    parse_stype,
    standard_space,
    symplectic_basis,
)

I2 = BitMatrix.identity(2)
J2 = BitMatrix.from_lists([[0, 1], [1, 0]])
M4 = BitMatrix.from_lists([[1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 0], [1, 1, 0, 1]])

FAMILIES = ("A", "A-mirror", "B", "B-mirror", "C", "SP-J", "SP-M")


@dataclass(frozen=True)
class ClassDescriptor:
    stype: SpaceType
    dim: int
    dd: DDInvariant
    family: str
    k: int

    @property
    def key(self) -> tuple:
        return class_key(self.stype, self.dd)

    def as_dict(self) -> dict:
        return {
            "space": self.stype.value,
            "dim": self.dim,
            "DD": list(self.dd),
            "DD_code": self.dd.code,
            "family": self.family,
            "k": self.k,
        }


def class_key(stype: SpaceType, dd: DDInvariant) -> tuple:
    return tuple(dd) if stype is SpaceType.EVO else (dd.D, dd.alpha)


def family_dd(family: str, k: int) -> DDInvariant:
    """DD invariant predicted for a family member (independent of the dimension)."""
    if family == "A":
        return DDInvariant(k, 1, k + 1, 1)
    if family == "B":
        return DDInvariant(k + 1, 0, k + 1 if k % 2 else k, 1)
    if family == "C":
        return DDInvariant(k + 2, 1, k + 2, 1)
    if family in ("A-mirror", "B-mirror"):
        return family_dd(family[0], k).mirrored()
    if family == "SP-J":
        return DDInvariant(k, 1, k, 1)
    if family == "SP-M":
        return DDInvariant(2 * k, 0, 2 * k, 0)
    raise InvalidArgument(f"unknown family {family!r}")


def _blocks(*groups: tuple[BitMatrix, int]) -> list[BitMatrix]:
    return [m for m, count in groups for _ in range(count)]


def _evo_matrices(n: int) -> list[tuple[str, int, BitMatrix]]:
    out = []
    for k in range(1, n):
        a = block_diag(*_blocks((I2, n - k), (J2, k)))
        out += [("A", k, a), ("A-mirror", k, a.complement())]
    for k in range(n):
        b = block_diag(BitMatrix.identity(2 * (n - k)).complement(), *_blocks((J2, k)))
        out += [("B", k, b), ("B-mirror", k, b.complement())]
    for k in range(1, n - 1):
        inner = block_diag(*_blocks((I2, n - k - 1), (J2, k))).complement()
        out.append(("C", k, block_diag(inner, J2)))
    return out


def _symp_matrices(n: int) -> list[tuple[str, int, BitMatrix]]:
    out = []
    for k in range(1, n + 1):
        out.append(("SP-J", k, block_diag(*_blocks((J2, k), (I2, n - k)))))
    for k in range(n // 2 + 1):
        blocks = _blocks((M4, k), (I2, n - 2 * k))
        out.append(("SP-M", k, block_diag(*blocks) if blocks else BitMatrix.identity(0)))
    return out


def oddo_adapted_basis(space: BilinearSpace) -> BitMatrix:
    """Columns: a standard symplectic basis of omega-perp, then omega."""
    if space.stype is not SpaceType.ODDO:
        raise InvalidArgument("adapted basis requested on a non-ODDO space")
    w = space.omega_bits
    pairs = hyperbolic_pairs(space.pair, space.perp([w]))
    return BitMatrix.from_columns([v for p in pairs for v in p] + [w], space.dim)


@lru_cache(maxsize=None)
def _representatives(stype: SpaceType, dim: int) -> tuple[tuple[ClassDescriptor, Involution], ...]:
    space = standard_space(stype, dim) if dim else None
    if stype is SpaceType.EVO:
        raw = _evo_matrices(dim // 2)
    elif stype is SpaceType.SYMP:
        raw = _symp_matrices(dim // 2)
    else:
        u = oddo_adapted_basis(space)
        u_inv = u.inverse()
        raw = [
            (fam, k, u @ block_diag(a, BitMatrix.identity(1)) @ u_inv)
            for fam, k, a in _symp_matrices(dim // 2)
        ]
    out = []
    for fam, k, m in raw:
        s = validate_involution(space, m)
        dd = dd_invariant(s)
        if class_key(stype, dd) != class_key(stype, family_dd(fam, k)):
            raise InternalInconsistency(f"{fam} k={k}: computed DD {list(dd)} disagrees with the family formula")
        out.append((ClassDescriptor(stype, dim, dd, fam, k), s))
    keys = [d.key for d, _ in out]
    if len(set(keys)) != len(keys):
        raise InternalInconsistency(f"duplicate class keys among {stype} dim {dim} representatives")
    return tuple(out)


def representatives(stype: SpaceType | str, dim: int) -> list[tuple[ClassDescriptor, Involution]]:
    """One involution per conjugacy class, on the standard space of that type."""
    stype = parse_stype(stype)
    check_parity(stype, dim)
    if dim < 1:
        raise InvalidArgument("dimension must be positive")
    return list(_representatives(stype, dim))


def class_count(stype: SpaceType | str, dim: int) -> int:
    """Number of conjugacy classes of involutions (the identity included).

    TO(2) = {I, J} is abelian with two classes, whereas ``5n - 4`` gives 1 at
    ``n = 1``; the count returned is the true one.
    """
    stype = parse_stype(stype)
    check_parity(stype, dim)
    n = dim // 2
    if stype is SpaceType.EVO:
        return 2 if n == 1 else 5 * n - 4
    return (3 * n + 2) // 2 if n % 2 == 0 else (3 * n + 1) // 2


def formula_class_count(stype: SpaceType | str, dim: int) -> int:
    """The closed-form count as stated for general n, with no small-n correction."""
    stype = parse_stype(stype)
    check_parity(stype, dim)
    if stype is SpaceType.EVO:
        return 5 * (dim // 2) - 4
    return class_count(stype, dim)


def classify_involution(s: Involution) -> ClassDescriptor:
    stype = s.space.stype
    key = class_key(stype, dd_invariant(s))
    for desc, _ in _representatives(stype, s.dim):
        if desc.key == key:
            return desc
    raise InternalInconsistency(f"no representative matches invariant key {key}")


def _same_space(s: Involution, t: Involution) -> None:
    if s.space != t.space:
        raise InvalidArgument("involutions live on different spaces")


def are_conjugate(s: Involution, t: Involution) -> bool:
    _same_space(s, t)
    stype = s.space.stype
    return class_key(stype, dd_invariant(s)) == class_key(stype, dd_invariant(t))


def find_conjugator(s: Involution, t: Involution, *, allow_large: bool = False) -> Isometry | None:
    """First isometry P in enumeration order with ``P s P^{-1} = t``, else None."""
    _same_space(s, t)
    space = s.space
    group = group_array(space, allow_large=allow_large)
    ps = _batch.right_const(group, s.matrix)
    tp = _batch.left_const(t.matrix, group)
    hits = np.flatnonzero(np.all(ps == tp, axis=1))
    if not len(hits):
        return None
    return Isometry(space, _batch.to_matrix(group[hits[0]], space.dim))


def conjugation_orbits(group: np.ndarray, gram: BitMatrix, items: np.ndarray) -> list[np.ndarray]:
    """Orbits of ``items`` (a stack closed under conjugation) under conjugation by ``group``.

    Each orbit is the sorted array of indices into ``items``.
    """
    n = gram.nrows
    item_keys = _batch.keys(items)
    order = np.argsort(item_keys)
    sorted_keys = item_keys[order]
    pinv = _batch.inverse_isometries(group, gram)
    label = np.full(len(items), -1)
    orbits: list[np.ndarray] = []
    for i in range(len(items)):
        if label[i] >= 0:
            continue
        s = _batch.to_matrix(items[i], n)
        conj_keys = np.unique(_batch.keys(_batch.mul(_batch.right_const(group, s), pinv)))
        pos = np.minimum(np.searchsorted(sorted_keys, conj_keys), len(sorted_keys) - 1)
        if np.any(sorted_keys[pos] != conj_keys):
            raise InternalInconsistency("item set is not closed under conjugation")
        idx = np.sort(order[pos])
        label[idx] = len(orbits)
        orbits.append(idx)
    return orbits


def involution_orbits(space: BilinearSpace, *, allow_large: bool = False) -> tuple[np.ndarray, list[np.ndarray]]:
    """All involutions as a row stack, and their orbits under conjugation by the whole group."""
    group = group_array(space, allow_large=allow_large)
    invs = group[involution_mask(group)]
    return invs, conjugation_orbits(group, space.gram, invs)


def symplectic_transitive_map(space: BilinearSpace, v, w) -> Isometry:
    """An isometry P of a SYMP space with ``P v = w``, for nonzero v, w."""
    v = v.bits if isinstance(v, BitVector) else v
    w = w.bits if isinstance(w, BitVector) else w
    if space.stype is not SpaceType.SYMP:
        raise InvalidArgument("transitivity map requires a symplectic space")
    if not v or not w:
        raise InvalidArgument("vectors must be nonzero")
    bv = BitMatrix.from_columns(symplectic_basis(space, v), space.dim)
    bw = BitMatrix.from_columns(symplectic_basis(space, w), space.dim)
    return validate_isometry(space, bw @ bv.inverse())


def as_involution(space: BilinearSpace, m: BitMatrix) -> Involution:
    return validate_involution(space, m)


def involutions_from_stack(space: BilinearSpace, stack: np.ndarray) -> list[Involution]:
    return [_trusted_involution(space, _batch.to_matrix(r, space.dim)) for r in stack]
