"""Vectorised kernels over stacks of small square F2 matrices.

A stack is an ``(N, n)`` unsigned array: entry ``[k, i]`` is row ``i`` of
matrix ``k`` packed as in :mod:`f2invol.gf2`.  Only ``n <= 8`` is supported
so that a whole matrix packs into one ``uint64`` key.
"""

from __future__ import annotations

import numpy as np

from .gf2 import BitMatrix

MAX_N = 8
DTYPE = np.uint16


def parity_table(n: int) -> np.ndarray:
    x = np.arange(1 << n, dtype=np.uint32)
    out = np.zeros(1 << n, dtype=np.uint8)
    while x.any():
        out ^= (x & 1).astype(np.uint8)
        x >>= 1
    return out


def vecmat_table(m: BitMatrix) -> np.ndarray:
    """``table[x] = x * m`` for every packed row vector ``x``."""
    return np.array([m.vecmat(x) for x in range(1 << m.nrows)], dtype=DTYPE)


def from_matrix(m: BitMatrix) -> np.ndarray:
    return np.array(m.rows, dtype=DTYPE)


def to_matrix(rows: np.ndarray, n: int) -> BitMatrix:
    return BitMatrix._raw(n, n, (int(r) for r in rows))


def right_const(stack: np.ndarray, m: BitMatrix) -> np.ndarray:
    """Each matrix of the stack times the fixed matrix ``m``."""
    return vecmat_table(m)[stack]


def left_const(m: BitMatrix, stack: np.ndarray) -> np.ndarray:
    """The fixed matrix ``m`` times each matrix of the stack."""
    a = np.broadcast_to(np.array(m.rows, dtype=DTYPE), stack.shape)
    return mul(a, stack)


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise products ``a[k] @ b[k]``."""
    n = a.shape[1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=DTYPE)
    for k in range(n):
        out ^= ((a >> k) & 1).astype(DTYPE) * b[:, k : k + 1]
    return out


def transpose(stack: np.ndarray) -> np.ndarray:
    n = stack.shape[1]
    out = np.zeros_like(stack)
    for i in range(n):
        for j in range(n):
            out[:, j] |= ((stack[:, i] >> j) & 1) << i
    return out


def keys(stack: np.ndarray) -> np.ndarray:
    n = stack.shape[1]
    out = np.zeros(stack.shape[0], dtype=np.uint64)
    for i in range(n):
        out |= stack[:, i].astype(np.uint64) << np.uint64(n * i)
    return out


def is_identity(stack: np.ndarray) -> np.ndarray:
    n = stack.shape[1]
    ident = np.array([1 << i for i in range(n)], dtype=DTYPE)
    return np.all(stack == ident, axis=1)


def inverse_isometries(stack: np.ndarray, gram: BitMatrix) -> np.ndarray:
    """Inverses of isometries of ``gram`` via ``P^{-1} = G^{-1} P^T G``."""
    ginv = gram.inverse()
    assert ginv is not None
    return left_const(ginv, right_const(transpose(stack), gram))
