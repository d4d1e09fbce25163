"""The group M_V x| Sp(V), its embedding theta into Iso(V + <1> + <1>), and S_A counting.

``V`` is a standard symplectic space with semi-norm ``q``.  Elements of
``M_V = V + F2`` are packed as ``v | lam << dim V``.  The extended space
``V^`` uses the basis ``(V-basis, Omega, f)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _batch
from .errors import InvalidArgument, NotAnIsometry, ShapeError
from .gf2 import BitMatrix, block_diag, dot, row_space, span_elements, span_reduce
from .invariants import alpha, dickson_D
from .isometries import (
    Isometry,
    _trusted_involution,
    enumerate_group,
    group_array,
    group_order,
    is_isometry,
    mirror,
)
from .spaces import BilinearSpace, SemiNorm, SpaceType, classify_and_standardize, standard_space

OMEGA_F_GRAM = BitMatrix.from_lists([[0, 1], [1, 1]])


def standard_seminorm(dim: int) -> SemiNorm:
    return SemiNorm(standard_space(SpaceType.SYMP, dim))


def _check_symplectic(q: SemiNorm, a: BitMatrix) -> None:
    if a.shape != (q.space.dim, q.space.dim):
        raise ShapeError(f"expected a {q.space.dim}x{q.space.dim} matrix, got {a.shape}")
    if not is_isometry(q.space, a):
        raise NotAnIsometry("matrix is not symplectic")


@dataclass(frozen=True)
class SqFunctional:
    """The linear form ``v -> q(v) + q(A v)`` as a coefficient vector."""

    base: SemiNorm
    a: BitMatrix
    coeffs: int

    def __call__(self, v: int) -> int:
        return dot(self.coeffs, v)


def sq(q: SemiNorm, a: BitMatrix) -> SqFunctional:
    _check_symplectic(q, a)
    cols = a.columns_bits()
    coeffs = sum((q(1 << j) ^ q(c)) << j for j, c in enumerate(cols))
    return SqFunctional(q, a, coeffs)


def mv_matrix(q: SemiNorm, a: BitMatrix) -> BitMatrix:
    """``A~`` on ``M_V``: ``A`` in the top-left block, ``S_q A`` then 1 in the last row."""
    n = q.space.dim
    c = sq(q, a).coeffs
    return BitMatrix._raw(n + 1, n + 1, list(a.rows) + [c | 1 << n])


def mv_act(q: SemiNorm, a: BitMatrix, x: tuple[int, int]) -> tuple[int, int]:
    v, lam = x
    f = sq(q, a)
    return a.apply(v), f(v) ^ lam


@dataclass(frozen=True)
class SemiDirectElement:
    v: int
    lam: int
    a: BitMatrix

    @property
    def packed(self) -> int:
        return self.v | self.lam << self.a.nrows


@dataclass(frozen=True)
class SemiDirectGroup:
    """``M_V x| Sp(V)`` for a fixed semi-norm; ``(x, A)(y, B) = (x + A~ y, A B)``."""

    q: SemiNorm
    space: BilinearSpace = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "space", self.q.space)

    @classmethod
    def standard(cls, dim: int) -> "SemiDirectGroup":
        return cls(standard_seminorm(dim))

    @property
    def dim(self) -> int:
        return self.space.dim

    def element(self, v: int, lam: int, a: BitMatrix) -> SemiDirectElement:
        _check_symplectic(self.q, a)
        if v >> self.dim or lam not in (0, 1):
            raise InvalidArgument("v must lie in V and lambda in {0, 1}")
        return SemiDirectElement(v, lam, a)

    def identity(self) -> SemiDirectElement:
        return SemiDirectElement(0, 0, BitMatrix.identity(self.dim))

    def mul(self, x: SemiDirectElement, y: SemiDirectElement) -> SemiDirectElement:
        v, lam = mv_act(self.q, x.a, (y.v, y.lam))
        return SemiDirectElement(x.v ^ v, x.lam ^ lam, x.a @ y.a)

    def inverse(self, x: SemiDirectElement) -> SemiDirectElement:
        g = self.space.gram
        a_inv = g.inverse() @ x.a.T @ g
        v, lam = mv_act(self.q, a_inv, (x.v, x.lam))
        return SemiDirectElement(v, lam, a_inv)

    def is_involution(self, x: SemiDirectElement) -> bool:
        return sd_is_involution(self.q, x)

    def order(self) -> int:
        return (1 << (self.dim + 1)) * group_order(SpaceType.SYMP, self.dim)

    def elements(self, *, allow_large: bool = False) -> Iterator[SemiDirectElement]:
        """Ordered by the Sp(V) enumeration, then by packed ``(v, lam)``."""
        n = self.dim
        for g in enumerate_group(self.space, allow_large=allow_large):
            for x in range(1 << (n + 1)):
                yield SemiDirectElement(x & ((1 << n) - 1), x >> n, g.matrix)

    def generators(self) -> list[SemiDirectElement]:
        """Transvections ``v -> v + b(v, u) u`` for every nonzero u, and the basis of ``M_V``."""
        n = self.dim
        gens = []
        for u in range(1, 1 << n):
            f = self.space.functional(u)
            cols = [(1 << j) ^ (u if (f >> j) & 1 else 0) for j in range(n)]
            gens.append(SemiDirectElement(0, 0, BitMatrix.from_columns(cols, n)))
        ident = BitMatrix.identity(n)
        gens += [SemiDirectElement(1 << i, 0, ident) for i in range(n)]
        gens.append(SemiDirectElement(0, 1, ident))
        return gens


def sd_is_involution(q: SemiNorm, x: SemiDirectElement) -> bool:
    """``A^2 = Id`` and ``(A~ + Id)(v, lam) = 0``."""
    if not (x.a @ x.a).is_identity():
        return False
    return mv_act(q, x.a, (x.v, x.lam)) == (x.v, x.lam)


def sd_mirror(x: SemiDirectElement) -> SemiDirectElement:
    return SemiDirectElement(x.v, x.lam ^ 1, x.a)


def hat_space(q: SemiNorm) -> BilinearSpace:
    return BilinearSpace.from_gram(block_diag(q.space.gram, OMEGA_F_GRAM))


def theta_matrix(q: SemiNorm, x: SemiDirectElement) -> BitMatrix:
    n = q.space.dim
    omega = 1 << n
    cols = [c | q.space.pair(c, x.v) << n for c in x.a.columns_bits()]
    cols.append(omega)
    cols.append(x.v | (x.lam ^ q(x.v)) << n | 1 << (n + 1))
    return BitMatrix.from_columns(cols, n + 2)


def theta(q: SemiNorm, x: SemiDirectElement) -> Isometry:
    """``phi(v, lam) j(A)`` as an isometry of ``V^``."""
    return Isometry(hat_space(q), theta_matrix(q, x))


def standardizer(q: SemiNorm) -> tuple[BitMatrix, BitMatrix]:
    """``(U, U^{-1})`` with ``U^T G^ U = I`` for the Gram of ``V^``."""
    _, u = classify_and_standardize(hat_space(q).gram)
    return u, u.inverse()


def theta_standard(q: SemiNorm, x: SemiDirectElement) -> Isometry:
    """theta followed by the change of basis onto ``(F2^{dim V + 2}, dot)``."""
    u, u_inv = standardizer(q)
    space = standard_space(SpaceType.EVO, q.space.dim + 2)
    return Isometry(space, u_inv @ theta_matrix(q, x) @ u)


def theta_mirror_commutes(q: SemiNorm, x: SemiDirectElement) -> bool:
    return theta(q, sd_mirror(x)).matrix == mirror(theta(q, x)).matrix


def element_arrays(group: SemiDirectGroup, *, allow_large: bool = False) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(A, v, lam)`` arrays for every element, in :meth:`SemiDirectGroup.elements` order."""
    n = group.dim
    sp = group_array(group.space, allow_large=allow_large)
    m = 1 << (n + 1)
    x = np.tile(np.arange(m, dtype=np.int64), len(sp))
    return np.repeat(sp, m, axis=0), x & ((1 << n) - 1), x >> n


def _q_table(q: SemiNorm) -> np.ndarray:
    return np.array([q(y) for y in range(1 << q.space.dim)], dtype=np.int64)


def _apply_batch(a: np.ndarray, v: np.ndarray | int) -> np.ndarray:
    """``A v`` for a batch of matrices and (per-matrix or shared) vectors."""
    n = a.shape[1]
    par = _batch.parity_table(n)
    out = np.zeros(len(a), dtype=np.int64)
    for i in range(n):
        out |= par[a[:, i] & v].astype(np.int64) << i
    return out


def _sq_batch(q: SemiNorm, a: np.ndarray) -> np.ndarray:
    """Coefficient vectors of ``S_q A`` for a batch of matrices."""
    qtab = _q_table(q)
    cols = _batch.transpose(a).astype(np.int64)
    out = np.zeros(len(a), dtype=np.int64)
    for j in range(a.shape[1]):
        out |= (qtab[cols[:, j]] ^ qtab[1 << j]) << j
    return out


def mul_batch(q: SemiNorm, a, v, lam, s: SemiDirectElement):
    """Right multiplication of a batch of elements by the fixed element ``s``."""
    n = q.space.dim
    par = _batch.parity_table(n)
    new_v = v ^ _apply_batch(a, s.v)
    new_lam = lam ^ par[_sq_batch(q, a) & s.v].astype(np.int64) ^ s.lam
    return _batch.right_const(a, s.a), new_v, new_lam


def theta_batch(q: SemiNorm, a: np.ndarray, v: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """theta of a batch of elements, in the ``(V-basis, Omega, f)`` basis."""
    n = q.space.dim
    if n + 2 > _batch.MAX_N:
        raise InvalidArgument(f"batch theta supports dim V <= {_batch.MAX_N - 2}")
    par = _batch.parity_table(n)
    gv = np.array([q.space.functional(y) for y in range(1 << n)], dtype=np.int64)[v]
    a_cols = _batch.transpose(a).astype(np.int64)
    cols = np.zeros((len(a), n + 2), dtype=np.int64)
    for i in range(n):
        cols[:, i] = a_cols[:, i] | par[a_cols[:, i] & gv].astype(np.int64) << n
    cols[:, n] = 1 << n
    cols[:, n + 1] = v | (lam ^ _q_table(q)[v]) << n | 1 << (n + 1)
    return _batch.transpose(cols.astype(_batch.DTYPE))


def theta_stack(group: SemiDirectGroup, *, allow_large: bool = False, standard: bool = True) -> np.ndarray:
    """theta of every element, in :meth:`SemiDirectGroup.elements` order, as a batch stack.

    With ``standard`` the matrices are moved onto ``(F2^{dim V + 2}, dot)``.
    """
    st = theta_batch(group.q, *element_arrays(group, allow_large=allow_large))
    if standard:
        u, u_inv = standardizer(group.q)
        st = _batch.left_const(u_inv, _batch.right_const(st, u))
    return st


def generated_order(gens: np.ndarray) -> int:
    """Order of the group generated by a batch stack of invertible matrices."""
    n = gens.shape[1]
    ident = np.array([[1 << i for i in range(n)]], dtype=_batch.DTYPE)
    current = ident
    size = 1
    while True:
        prods = [current] + [_batch.left_const(_batch.to_matrix(g, n), current) for g in gens]
        allm = np.concatenate(prods)
        _, idx = np.unique(_batch.keys(allm), return_index=True)
        current = allm[np.sort(idx)]
        if len(current) == size:
            return size
        size = len(current)


@dataclass(frozen=True)
class InvolutionLocalData:
    """Eig(A), Z(A), B(A), coset representatives of H(A) = Z(A)/B(A), and C(A).

    ``centralizer`` is a batch row stack; :meth:`centralizer_matrices` unpacks it.
    """

    a: BitMatrix
    eig: list[int]
    z: list[int]
    b_set: list[int]
    h_quotient: list[int]
    centralizer: np.ndarray = field(repr=False, compare=False)

    def centralizer_matrices(self) -> list[BitMatrix]:
        n = self.a.nrows
        return [_batch.to_matrix(r, n) for r in self.centralizer]


def _reducer(basis: list[int], ncols: int):
    echelon, pivots = row_space(BitMatrix.from_rows(basis, ncols)) if basis else ([], [])
    return lambda x: span_reduce(x, echelon, pivots)


def centralizer_stack(space: BilinearSpace, a: BitMatrix, *, allow_large: bool = False) -> np.ndarray:
    group = group_array(space, allow_large=allow_large)
    hits = np.all(_batch.right_const(group, a) == _batch.left_const(a, group), axis=1)
    return group[hits]


def local_data(q: SemiNorm, a: BitMatrix, *, allow_large: bool = False) -> InvolutionLocalData:
    _check_symplectic(q, a)
    if not (a @ a).is_identity():
        raise InvalidArgument("A is not an involution")
    n = q.space.dim
    ident = BitMatrix.identity(n)
    eig = [v.bits for v in (a + ident).kernel_basis()]
    shifted = mv_matrix(q, a) + BitMatrix.identity(n + 1)
    z = [v.bits for v in shifted.kernel_basis()]
    b_set, _ = row_space(shifted.T)
    reduce = _reducer(b_set, n + 1)
    h = sorted({reduce(x) for x in span_elements(0, z)})
    return InvolutionLocalData(a, eig, z, b_set, h, centralizer_stack(q.space, a, allow_large=allow_large))


def _mv_images(q: SemiNorm, stack: np.ndarray, x: int) -> np.ndarray:
    """``P~ x`` for every P of a batch stack of symplectic matrices."""
    n = q.space.dim
    par = _batch.parity_table(n)
    v, lam = x & ((1 << n) - 1), x >> n
    pv = np.zeros(len(stack), dtype=np.int64)
    for i in range(n):
        pv |= par[stack[:, i] & v].astype(np.int64) << i
    # (S_q P)(v) = q(v) + q(P v)
    qtab = np.array([q(y) for y in range(1 << n)], dtype=np.int64)
    top = qtab[pv] ^ q(v) ^ lam
    return pv | top << n


def h_orbits(q: SemiNorm, data: InvolutionLocalData) -> list[list[int]]:
    """Orbits of C(A) on the coset representatives of H(A)."""
    n = q.space.dim
    reduce = _reducer(data.b_set, n + 1)
    red_table = np.array([reduce(x) for x in range(1 << (n + 1))], dtype=np.int64)
    seen: set[int] = set()
    orbits = []
    for h in data.h_quotient:
        if h in seen:
            continue
        # C(A) is a group, so the image set of h is already its whole orbit
        orbit = sorted(int(y) for y in np.unique(red_table[_mv_images(q, data.centralizer, h)]))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def s_a_orbit_count(a: BitMatrix, q: SemiNorm | None = None, *, allow_large: bool = False) -> int:
    """Number of semidirect conjugacy classes of involutions lying over A, by brute force."""
    q = q or standard_seminorm(a.nrows)
    return len(h_orbits(q, local_data(q, a, allow_large=allow_large)))


def predicted_s_a(a: BitMatrix, space: BilinearSpace | None = None) -> int:
    """Case table: 4 for Id, 2 when D = dim/2, else 3 or 4 as alpha is 1 or 0."""
    space = space or standard_space(SpaceType.SYMP, a.nrows)
    s = _trusted_involution(space, a)
    d, al = dickson_D(s), alpha(s)
    if d == 0:
        return 4
    if 2 * d == space.dim:
        return 2
    return 3 if al else 4
