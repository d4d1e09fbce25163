"""Nondegenerate symmetric bilinear spaces over F2.

Vectors are packed ints in the space's own basis.  ``b(x, y) = x^T G y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Sequence

from .errors import InvalidArgument
from .gf2 import BitMatrix, BitVector, _rref, dot, solve_affine, span_reduce


class SpaceType(str, Enum):
    SYMP = "symp"
    EVO = "evo"
    ODDO = "oddo"

    def __str__(self) -> str:
        return self.value


def parse_stype(s: str | SpaceType) -> SpaceType:
    if isinstance(s, SpaceType):
        return s
    try:
        return SpaceType(s.lower())
    except ValueError:
        raise InvalidArgument(f"unknown space type {s!r}; expected symp, evo or oddo") from None


def check_parity(stype: SpaceType, dim: int) -> None:
    if dim < 0:
        raise InvalidArgument(f"negative dimension {dim}")
    if stype is SpaceType.SYMP and dim % 2:
        raise InvalidArgument(f"symplectic spaces have even dimension, got {dim}")
    if stype is SpaceType.ODDO and dim % 2 == 0:
        raise InvalidArgument(f"oddo spaces have odd dimension, got {dim}")
    if stype is SpaceType.EVO and (dim % 2 or dim < 2):
        raise InvalidArgument(f"evo spaces have even dimension >= 2, got {dim}")


@dataclass(frozen=True)
class BilinearSpace:
    gram: BitMatrix
    omega: BitVector = field(compare=False)
    stype: SpaceType = field(compare=False)

    def __post_init__(self):
        g = self.gram
        if not g.is_square or not g.is_symmetric():
            raise InvalidArgument("Gram matrix must be square and symmetric")
        if g.inverse() is None:
            raise InvalidArgument("Gram matrix is degenerate; the form must be nondegenerate")
        w = self.omega.bits
        for i in range(g.nrows):
            if self.pair(w, 1 << i) != g[i, i]:
                raise InvalidArgument("omega does not satisfy b(omega, e_i) = b(e_i, e_i)")
        if self.stype is not _type_of(self.dim, w, self.pair(w, w)):
            raise InvalidArgument(f"space type {self.stype} is inconsistent with omega")

    @classmethod
    def from_gram(cls, gram: BitMatrix) -> "BilinearSpace":
        if not gram.is_square or not gram.is_symmetric():
            raise InvalidArgument("Gram matrix must be square and symmetric")
        inv = gram.inverse()
        if inv is None:
            raise InvalidArgument("Gram matrix is degenerate; the form must be nondegenerate")
        # G symmetric, so G^T x = diag(G) is solved by G^{-1} diag(G).
        w = inv.apply(gram.diagonal_bits())
        norm = (w & gram.vecmat(w)).bit_count() & 1
        return cls(gram, BitVector(gram.nrows, w), _type_of(gram.nrows, w, norm))

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def omega_bits(self) -> int:
        return self.omega.bits

    def pair(self, x: int, y: int) -> int:
        return (x & self.gram.vecmat(y)).bit_count() & 1

    def b(self, v: BitVector, w: BitVector) -> int:
        return self.pair(v.bits, w.bits)

    def functional(self, y: int) -> int:
        """Coefficient vector of ``x -> b(x, y)``."""
        return self.gram.vecmat(y)

    def norm(self, x: int) -> int:
        """``b(x, x)``, which is linear in ``x``."""
        return dot(self.omega.bits, self.gram.vecmat(x))

    def is_standard(self) -> bool:
        return self.gram == standard_gram(self.stype, self.dim)

    def perp(self, vectors: Sequence[int]) -> list[int]:
        """Basis of the orthogonal complement of ``span(vectors)``."""
        rows = [self.functional(v) for v in vectors]
        sol = solve_affine(rows, [0] * len(rows), self.dim)
        assert sol is not None
        return sol[1]

    def restrict(self, basis: Sequence[int]) -> "BilinearSpace":
        """The form restricted to ``span(basis)``, written in that basis."""
        k = len(basis)
        rows = [sum(self.pair(basis[i], basis[j]) << j for j in range(k)) for i in range(k)]
        return BilinearSpace.from_gram(BitMatrix.from_rows(rows, k))

    def __repr__(self) -> str:
        return f"BilinearSpace({self.stype.value}, dim={self.dim})"


def _type_of(dim: int, omega: int, omega_norm: int) -> SpaceType:
    if omega == 0:
        return SpaceType.SYMP
    return SpaceType.ODDO if omega_norm else SpaceType.EVO


def standard_gram(stype: SpaceType, dim: int) -> BitMatrix:
    if stype is SpaceType.SYMP:
        return BitMatrix.from_rows((1 << (i ^ 1) for i in range(dim)), dim)
    return BitMatrix.identity(dim)


def standard_space(stype: SpaceType | str, dim: int) -> BilinearSpace:
    """``nH`` (basis u1, v1, ..., un, vn) for SYMP, ``n<1>`` with the dot product otherwise."""
    stype = parse_stype(stype)
    check_parity(stype, dim)
    return BilinearSpace.from_gram(standard_gram(stype, dim))


def independent_extension(start: Sequence[int], candidates: Sequence[int], n: int) -> list[int]:
    """``start`` followed by those candidates that keep the list independent."""
    out: list[int] = []
    echelon: list[int] = []
    pivots: list[int] = []
    for v in list(start) + list(candidates):
        if span_reduce(v, echelon, pivots):
            out.append(v)
            echelon, pivots = _rref(echelon + [v], n)
    return out


def hyperbolic_pairs(pair: Callable[[int, int], int], basis: Sequence[int]) -> list[tuple[int, int]]:
    """Split a symplectic span into hyperbolic pairs (x, y) with b(x, y) = 1.

    ``basis[0]`` is always the first ``x``, so a chosen vector can be put
    at the front to get a symplectic basis extending it.
    """
    work = list(basis)
    pairs = []
    while work:
        x = work.pop(0)
        k = next((i for i, w in enumerate(work) if pair(x, w)), None)
        if k is None:
            raise InvalidArgument("span is degenerate")
        y = work.pop(k)
        work = [w ^ (x if pair(w, y) else 0) ^ (y if pair(w, x) else 0) for w in work]
        pairs.append((x, y))
    return pairs


def symplectic_basis(space: BilinearSpace, first: int | None = None) -> list[int]:
    """Ordered symplectic basis u1, v1, ... of a SYMP space, optionally starting at ``first``."""
    if space.stype is not SpaceType.SYMP:
        raise InvalidArgument("symplectic basis requested on a non-symplectic space")
    units = [1 << i for i in range(space.dim)]
    start = [first] if first else []
    basis = independent_extension(start, units, space.dim)
    return [v for p in hyperbolic_pairs(space.pair, basis) for v in p]


def classify_and_standardize(gram: BitMatrix) -> tuple[SpaceType, BitMatrix]:
    """Detect the type of ``gram`` and a change of basis ``U`` with ``U^T G U`` standard.

    Vectors of norm one are split off first, then hyperbolic pairs; if any
    orthonormal vector was found, every hyperbolic pair (y, z) is merged with
    the last orthonormal x into the orthonormal triple x+y, x+z, x+y+z.
    """
    space = BilinearSpace.from_gram(gram)
    pair = space.pair
    n = space.dim
    work = [1 << i for i in range(n)]
    ortho: list[int] = []
    while True:
        x = next((w for w in work if pair(w, w)), None)
        if x is None:
            break
        ortho.append(x)
        work = [w ^ x if pair(w, x) else w for w in work if w != x]
    pairs = hyperbolic_pairs(pair, work)
    if not ortho:
        cols = [v for p in pairs for v in p]
        return SpaceType.SYMP, BitMatrix.from_columns(cols, n)
    for y, z in pairs:
        x = ortho.pop()
        ortho += [x ^ y, x ^ z, x ^ y ^ z]
    stype = SpaceType.ODDO if n % 2 else SpaceType.EVO
    return stype, BitMatrix.from_columns(ortho, n)


@dataclass(frozen=True)
class SemiNorm:
    """``q(sum x_i u_i + y_i v_i) = sum x_i y_i + <linear, v>`` on a standard symplectic space."""

    space: BilinearSpace
    linear: int = 0

    def __post_init__(self):
        if self.space.stype is not SpaceType.SYMP or not self.space.is_standard():
            raise InvalidArgument("semi-norms are defined here on standard symplectic spaces only")

    def __call__(self, v: int) -> int:
        m = _even_mask(self.space.dim)
        return ((v & m & (v >> 1)).bit_count() ^ (v & self.linear).bit_count()) & 1

    def value(self, v: BitVector) -> int:
        return self(v.bits)

    def shifted(self, linear: int) -> "SemiNorm":
        return SemiNorm(self.space, self.linear ^ linear)


@lru_cache(maxsize=None)
def _even_mask(dim: int) -> int:
    return sum(1 << (2 * i) for i in range(dim // 2))


def semi_norm_standard(space: BilinearSpace) -> SemiNorm:
    return SemiNorm(space)
