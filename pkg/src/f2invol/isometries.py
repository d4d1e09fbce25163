"""Isometries and involutions of bilinear spaces, the mirror, and group enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _batch
from .errors import CapExceeded, InvalidArgument, MirrorUndefined, NotAnInvolution, NotAnIsometry, ShapeError
from .gf2 import BitMatrix, solve_affine, span_elements
from .spaces import BilinearSpace, SpaceType, check_parity, parse_stype

# Default largest enumerable dimension per type; above it callers must pass allow_large.
ENUMERATION_CAP = {SpaceType.EVO: 6, SpaceType.ODDO: 7, SpaceType.SYMP: 6}


@dataclass(frozen=True)
class Isometry:
    space: BilinearSpace
    matrix: BitMatrix

    @property
    def dim(self) -> int:
        return self.space.dim

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if other.space != self.space:
            raise InvalidArgument("cannot compose isometries of different spaces")
        return Isometry(self.space, self.matrix @ other.matrix)

    def inverse(self) -> "Isometry":
        g = self.space.gram
        return Isometry(self.space, g.inverse() @ self.matrix.T @ g)

    def conjugate_by(self, p: "Isometry") -> "Isometry":
        """``p self p^{-1}``."""
        return p @ self @ p.inverse()

    def apply(self, v: int) -> int:
        return self.matrix.apply(v)

    def is_involution(self) -> bool:
        return (self.matrix @ self.matrix).is_identity()


@dataclass(frozen=True)
class Involution:
    iso: Isometry

    def __post_init__(self):
        if not self.iso.is_involution():
            raise NotAnInvolution("matrix does not square to the identity")

    @property
    def space(self) -> BilinearSpace:
        return self.iso.space

    @property
    def matrix(self) -> BitMatrix:
        return self.iso.matrix

    @property
    def dim(self) -> int:
        return self.iso.space.dim


def _trusted_isometry(space: BilinearSpace, m: BitMatrix) -> Isometry:
    return Isometry(space, m)


def _trusted_involution(space: BilinearSpace, m: BitMatrix) -> Involution:
    inv = object.__new__(Involution)
    object.__setattr__(inv, "iso", Isometry(space, m))
    return inv


def is_isometry(space: BilinearSpace, m: BitMatrix) -> bool:
    if m.shape != (space.dim, space.dim):
        return False
    return m.T @ space.gram @ m == space.gram


def validate_isometry(space: BilinearSpace, m: BitMatrix) -> Isometry:
    if m.shape != (space.dim, space.dim):
        raise ShapeError(f"expected a {space.dim}x{space.dim} matrix, got {m.shape}")
    if not is_isometry(space, m):
        raise NotAnIsometry("not an isometry: M^T G M != G")
    return Isometry(space, m)


def validate_involution(space: BilinearSpace, m: BitMatrix) -> Involution:
    return Involution(validate_isometry(space, m))


def identity(space: BilinearSpace) -> Isometry:
    return Isometry(space, BitMatrix.identity(space.dim))


def mirror_matrix(space: BilinearSpace, m: BitMatrix) -> BitMatrix:
    """``v -> m v + b(v, omega) omega`` as a matrix."""
    if space.stype is not SpaceType.EVO:
        raise MirrorUndefined(f"the mirror is undefined on {space.stype} spaces")
    w = space.omega_bits
    f = space.functional(w)
    return BitMatrix._raw(m.nrows, m.ncols, (r ^ f if (w >> i) & 1 else r for i, r in enumerate(m.rows)))


def mirror(f):
    """Mirror of an :class:`Isometry` or :class:`Involution` (same kind returned)."""
    if isinstance(f, Involution):
        return _trusted_involution(f.space, mirror_matrix(f.space, f.matrix))
    return Isometry(f.space, mirror_matrix(f.space, f.matrix))


def group_order(stype: SpaceType | str, dim: int) -> int:
    stype = parse_stype(stype)
    check_parity(stype, dim)
    if stype is SpaceType.EVO:
        n = dim // 2
        return 2**n * math.prod(4**n - 4**i for i in range(1, n))
    n = dim // 2
    return 2**n * math.prod(4**n - 4**i for i in range(n))


def check_cap(space: BilinearSpace, allow_large: bool) -> None:
    if not allow_large and space.dim > ENUMERATION_CAP[space.stype]:
        raise CapExceeded(
            f"refusing to enumerate the isometry group of the {space.stype} space of dim {space.dim} "
            f"(order {group_order(space.stype, space.dim):,}); pass allow_large to override"
        )


class _RowSearch:
    """Row-by-row backtracking for isometries.

    ``M`` is an isometry of ``G`` iff ``M H M^T = H`` with ``H = G^{-1}``, so
    the rows ``r_j`` are exactly the tuples with ``b_H(r_i, r_j) = H_ij``.  For
    a fixed prefix every constraint on the next row is linear (``b_H(x, x)``
    equals ``b_H(x, omega_H)``), so the candidates form an affine subspace,
    visited in increasing order.
    """

    def __init__(self, space: BilinearSpace):
        self.n = space.dim
        h = space.gram.inverse()
        assert h is not None
        self.h = h
        self.h_omega = h.vecmat(BilinearSpace.from_gram(h).omega_bits)

    def candidates(self, funcs: list[int], j: int) -> list[int]:
        h = self.h
        targets = [h[i, j] for i in range(j)] + [h[j, j]]
        sol = solve_affine(funcs + [self.h_omega], targets, self.n)
        if sol is None:
            return []
        return sorted(span_elements(*sol))

    def run(self, part: tuple[int, int] | None = None) -> Iterator[tuple[int, ...]]:
        n = self.n
        if n == 0:
            yield ()
            return
        rows = [0] * n
        funcs: list[int] = []

        def rec(j: int) -> Iterator[tuple[int, ...]]:
            cands = self.candidates(funcs, j)
            if j == 0 and part is not None:
                cands = _block(cands, *part)
            for x in cands:
                rows[j] = x
                if j + 1 == n:
                    yield tuple(rows)
                else:
                    funcs.append(self.h.vecmat(x))
                    yield from rec(j + 1)
                    funcs.pop()

        yield from rec(0)


def _block(items: list, index: int, count: int) -> list:
    """Contiguous block ``index`` of ``count`` near-equal blocks."""
    if not 0 <= index < count:
        raise InvalidArgument(f"partition index {index} out of range for {count} parts")
    k, r = divmod(len(items), count)
    start = index * k + min(index, r)
    return items[start : start + k + (index < r)]


def enumerate_group(
    space: BilinearSpace, *, allow_large: bool = False, part: tuple[int, int] | None = None
) -> Iterator[Isometry]:
    """Every isometry of ``space`` exactly once, in lexicographic order of row tuples.

    ``part=(i, k)`` restricts to the ``i``-th of ``k`` contiguous blocks of
    first-row candidates; concatenating the blocks in order reproduces the
    full stream.
    """
    check_cap(space, allow_large)
    n = space.dim
    for rows in _RowSearch(space).run(part):
        yield Isometry(space, BitMatrix._raw(n, n, rows))


def enumerate_involutions(
    space: BilinearSpace, *, allow_large: bool = False, part: tuple[int, int] | None = None
) -> Iterator[Involution]:
    for g in enumerate_group(space, allow_large=allow_large, part=part):
        if g.is_involution():
            yield _trusted_involution(space, g.matrix)


def group_array(space: BilinearSpace, *, allow_large: bool = False, chunk: int = 1 << 22) -> np.ndarray:
    """The whole group as an ``(N, dim)`` row stack, in :func:`enumerate_group` order.

    Breadth-first version of the same row search: every parent's candidates
    are kept in increasing order, so the final order is lexicographic too.
    """
    check_cap(space, allow_large)
    n = space.dim
    if n > _batch.MAX_N:
        raise CapExceeded(f"batch enumeration supports dim <= {_batch.MAX_N}")
    search = _RowSearch(space)
    h = search.h
    par = _batch.parity_table(n)
    everything = np.arange(1 << n, dtype=_batch.DTYPE)
    func_table = _batch.vecmat_table(h)
    prefix = np.zeros((1, 0), dtype=_batch.DTYPE)
    for j in range(n):
        cand = everything[par[everything & search.h_omega] == h[j, j]]
        targets = [h[i, j] for i in range(j)]
        funcs = func_table[prefix]
        step = max(1, chunk // max(1, len(cand)))
        pieces = []
        for start in range(0, len(prefix), step):
            f = funcs[start : start + step]
            ok = np.ones((len(f), len(cand)), dtype=bool)
            for i, t in enumerate(targets):
                ok &= par[f[:, i : i + 1] & cand[None, :]] == t
            pi, ci = np.nonzero(ok)
            pieces.append(np.concatenate([prefix[start + pi], cand[ci][:, None]], axis=1))
        prefix = np.concatenate(pieces) if pieces else np.zeros((0, j + 1), dtype=_batch.DTYPE)
    return prefix


def involution_mask(stack: np.ndarray) -> np.ndarray:
    return _batch.is_identity(_batch.mul(stack, stack))


def involution_array(space: BilinearSpace, *, allow_large: bool = False) -> np.ndarray:
    g = group_array(space, allow_large=allow_large)
    return g[involution_mask(g)]


def from_stack(space: BilinearSpace, stack: np.ndarray) -> list[Isometry]:
    n = space.dim
    return [Isometry(space, _batch.to_matrix(r, n)) for r in stack]
