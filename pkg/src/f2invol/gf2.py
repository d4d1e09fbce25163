"""Bit-packed vectors and matrices over F2.

Coordinates are packed into Python integers: coordinate ``i`` lives at bit
``i``.  A Python int is an arbitrary-length sequence of machine words, so
coordinate ``i`` sits at bit ``i % w`` of word ``i // w`` for any word size
``w``; :meth:`BitVector.words` exposes that view explicitly.

Matrices are stored row-major, one packed integer per row.  Every value is
immutable; no operation mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError

MAX_COLS = 4096


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(x: int, y: int) -> int:
    """Standard dot product of two packed vectors."""
    return (x & y).bit_count() & 1


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_str(x: int, length: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(length))


def str_to_bits(s: str) -> int:
    s = s.strip()
    if any(c not in "01" for c in s):
        raise ValueError(f"expected only '0'/'1' characters, got {s!r}")
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def _check_length(n: int) -> None:
    if n < 0:
        raise ShapeError(f"negative length {n}")
    if n > MAX_COLS:
        raise ShapeError(f"length {n} exceeds the cap of {MAX_COLS}")


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        _check_length(self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise ShapeError("bits set beyond the vector length")

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVector":
        return cls(n, 1 << i)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVector":
        return cls(len(entries), sum((e & 1) << i for i, e in enumerate(entries)))

    @classmethod
    def parse(cls, s: str) -> "BitVector":
        s = s.strip()
        return cls(len(s), str_to_bits(s))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.length))

    def set(self, i: int, value: int) -> "BitVector":
        if not 0 <= i < self.length:
            raise IndexError(i)
        bits = self.bits | (1 << i) if value & 1 else self.bits & ~(1 << i)
        return BitVector(self.length, bits)

    def __add__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ShapeError(f"length mismatch {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "BitVector") -> int:
        if self.length != other.length:
            raise ShapeError(f"length mismatch {self.length} vs {other.length}")
        return dot(self.bits, other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def words(self, width: int = 64) -> tuple[int, ...]:
        """Packed storage split into ``width``-bit words, least significant first."""
        nwords = max(1, -(-self.length // width))
        mask = (1 << width) - 1
        return tuple((self.bits >> (k * width)) & mask for k in range(nwords))

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.length)


def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are the lowest-index nonzero column still available; elimination
    clears each pivot column below and above the pivot row.
    """
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, len(work)):
            if work[i] & bit:
                work[i] ^= work[r]
        for i in range(r):
            if work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def span_reduce(x: int, echelon: Sequence[int], pivots: Sequence[int]) -> int:
    """Reduce ``x`` against an RREF basis; zero iff ``x`` lies in the span."""
    for row, p in zip(echelon, pivots):
        if (x >> p) & 1:
            x ^= row
    return x


def solve_affine(funcs: Sequence[int], targets: Sequence[int], n: int) -> tuple[int, list[int]] | None:
    """Solve ``dot(f_i, x) = t_i`` for ``x`` in F2^n.

    Returns a particular solution and a basis of the homogeneous solutions,
    or None when the system is inconsistent.
    """
    aug = [f | ((t & 1) << n) for f, t in zip(funcs, targets)]
    echelon, pivots = _rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    particular = 0
    for row, p in zip(echelon, pivots):
        if (row >> n) & 1:
            particular |= 1 << p
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(echelon, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return particular, basis


def span_elements(particular: int, basis: Sequence[int]) -> list[int]:
    """All vectors of ``particular + span(basis)``."""
    out = [particular]
    for b in basis:
        out += [x ^ b for x in out]
    return out


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_length(self.ncols)
        if self.nrows < 0:
            raise ShapeError(f"negative row count {self.nrows}")
        if len(self.rows) != self.nrows:
            raise ShapeError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ShapeError("row has bits set beyond the column count")

    # construction

    @classmethod
    def _raw(cls, nrows: int, ncols: int, rows: Iterable[int]) -> "BitMatrix":
        # Trusted constructor: skips validation on hot paths.
        m = object.__new__(cls)
        object.__setattr__(m, "nrows", nrows)
        object.__setattr__(m, "ncols", ncols)
        object.__setattr__(m, "rows", tuple(rows))
        return m

    @classmethod
    def from_rows(cls, rows: Iterable[int], ncols: int) -> "BitMatrix":
        rows = tuple(rows)
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        if not entries:
            return cls(0, 0, ())
        ncols = len(entries[0])
        if any(len(r) != ncols for r in entries):
            raise ShapeError("ragged rows")
        return cls.from_rows((BitVector.from_list(r).bits for r in entries), ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        return cls.from_rows(_transpose_rows(columns, nrows), len(columns)) if columns else cls(nrows, 0, (0,) * nrows)

    @classmethod
    def from_vectors(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        if not rows:
            return cls(0, 0, ())
        ncols = rows[0].length
        if any(r.length != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls.from_rows((r.bits for r in rows), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "BitMatrix":
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def ones(cls, nrows: int, ncols: int | None = None) -> "BitMatrix":
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, ((1 << ncols) - 1,) * nrows)

    @classmethod
    def parse(cls, text: str) -> "BitMatrix":
        return parse_matrix(text)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column_bits(self, j: int) -> int:
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.rows))

    def column(self, j: int) -> BitVector:
        return BitVector(self.nrows, self.column_bits(j))

    def columns_bits(self) -> list[int]:
        return _transpose_rows(self.rows, self.ncols)

    def diagonal_bits(self) -> int:
        return sum(((r >> i) & 1) << i for i, r in enumerate(self.rows[: self.ncols]))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def key(self) -> int:
        """Single integer packing all entries; equal matrices of one shape share a key."""
        k = 0
        for i, r in enumerate(self.rows):
            k |= r << (i * self.ncols)
        return k

    # arithmetic

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        return BitMatrix._raw(self.nrows, self.ncols, (a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return multiply(self, other)

    def apply(self, v: int) -> int:
        """Image of the packed column vector ``v``."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def __call__(self, v: BitVector) -> BitVector:
        if v.length != self.ncols:
            raise ShapeError(f"vector length {v.length} vs {self.ncols} columns")
        return BitVector(self.nrows, self.apply(v.bits))

    def vecmat(self, v: int) -> int:
        """Packed row vector ``v`` times this matrix."""
        out = 0
        rows = self.rows
        while v:
            low = v & -v
            out ^= rows[low.bit_length() - 1]
            v ^= low
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix._raw(self.ncols, self.nrows, _transpose_rows(self.rows, self.ncols))

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def complement(self) -> "BitMatrix":
        full = (1 << self.ncols) - 1
        return BitMatrix._raw(self.nrows, self.ncols, (r ^ full for r in self.rows))

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "BitMatrix | None":
        return inverse(self)

    def kernel_basis(self) -> list[BitVector]:
        return kernel_basis(self)

    def is_identity(self) -> bool:
        return self.is_square and all(r == 1 << i for i, r in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == tuple(_transpose_rows(self.rows, self.ncols))

    def __str__(self) -> str:
        return format_matrix(self)


def _transpose_rows(rows: Sequence[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        bit = 1 << i
        for j in iter_bits(r):
            out[j] |= bit
    return out


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over F2: row i of the result XORs the rows of ``b`` picked by row i of ``a``."""
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return BitMatrix._raw(a.nrows, b.ncols, (b.vecmat(r) for r in a.rows))


def rank(m: BitMatrix) -> int:
    return len(_rref(m.rows, m.ncols)[1])


def inverse(m: BitMatrix) -> BitMatrix | None:
    if not m.is_square:
        raise ShapeError(f"cannot invert a {m.shape} matrix")
    n = m.nrows
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    echelon, pivots = _rref(aug, n)
    if len(pivots) < n:
        return None
    mask = (1 << n) - 1
    return BitMatrix._raw(n, n, ((row >> n) & mask for row in echelon))


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of the right null space ``{x : m x = 0}``."""
    sol = solve_affine(m.rows, [0] * m.nrows, m.ncols)
    assert sol is not None
    return [BitVector(m.ncols, v) for v in sol[1]]


def row_space(m: BitMatrix) -> tuple[list[int], list[int]]:
    """RREF basis of the row space with its pivot columns."""
    return _rref(m.rows, m.ncols)


def block_diag(*blocks: BitMatrix) -> BitMatrix:
    rows: list[int] = []
    col_off = 0
    for b in blocks:
        rows.extend(r << col_off for r in b.rows)
        col_off += b.ncols
    return BitMatrix.from_rows(rows, col_off)


# text format


def parse_matrix(text: str) -> BitMatrix:
    """Parse rows of '0'/'1' characters; blank lines and '#' comments are skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("no matrix rows found")
    ncols = len(lines[0])
    for k, ln in enumerate(lines):
        if len(ln) != ncols:
            raise ValueError(f"row {k} has length {len(ln)}, expected {ncols}")
    return BitMatrix.from_rows((str_to_bits(ln) for ln in lines), ncols)


def parse_matrices(text: str) -> list[BitMatrix]:
    """Parse a stream of matrix blocks separated by blank lines."""
    blocks: list[list[str]] = [[]]
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            if blocks[-1]:
                blocks.append([])
            continue
        if not ln.startswith("#"):
            blocks[-1].append(ln)
    return [parse_matrix("\n".join(b)) for b in blocks if b]


def format_matrix(m: BitMatrix) -> str:
    return "\n".join(bits_to_str(r, m.ncols) for r in m.rows)


def read_matrix(path) -> BitMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())
