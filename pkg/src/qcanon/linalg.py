"""Dense exact linear algebra over QScalar.

Matrices are numpy object arrays holding :class:`~qcanon.qring.QScalar`
entries; weight spaces stay small enough (a few dozen dimensions) that dense
storage is the simplest correct choice.  Multiplication skips structural
zeros, which matters because ladder operators are very sparse.  Rank is
computed by fraction-free (Bareiss) elimination, whose interior divisions are
exact over an integral domain -- no rational arithmetic ever appears.
"""

from __future__ import annotations

import numpy as np

from .qring import ONE, ZERO, QScalar, bar_scalar, exact_div


def zeros(rows: int, cols: int | None = None) -> np.ndarray:
    if cols is None:
        return np.full(rows, ZERO, dtype=object)
    return np.full((rows, cols), ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = ONE
    return m


def unit_vector(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = ONE
    return v


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b with zero skipping; b may be a matrix or a vector."""
    if b.ndim == 1:
        out = zeros(a.shape[0])
        for j, x in enumerate(b):
            if not x:
                continue
            col = a[:, j]
            for i in range(a.shape[0]):
                if col[i]:
                    out[i] = out[i] + col[i] * x
        return out
    out = zeros(a.shape[0], b.shape[1])
    for k in range(a.shape[1]):
        brow = b[k]
        for i in range(a.shape[0]):
            aik = a[i, k]
            if not aik:
                continue
            orow = out[i]
            for j in range(b.shape[1]):
                if brow[j]:
                    orow[j] = orow[j] + aik * brow[j]
    return out


def mat_bar(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    flat_in, flat_out = a.reshape(-1), out.reshape(-1)
    for i, x in enumerate(flat_in):
        flat_out[i] = bar_scalar(x)
    return out


def mat_scale(a: np.ndarray, s: QScalar) -> np.ndarray:
    out = np.empty_like(a)
    flat_in, flat_out = a.reshape(-1), out.reshape(-1)
    for i, x in enumerate(flat_in):
        flat_out[i] = x * s
    return out


def mat_div(a: np.ndarray, s: QScalar) -> np.ndarray:
    """Entrywise exact division; raises InexactDivisionError on remainder."""
    out = np.empty_like(a)
    flat_in, flat_out = a.reshape(-1), out.reshape(-1)
    for i, x in enumerate(flat_in):
        flat_out[i] = exact_div(x, s) if x else ZERO
    return out


def mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


def is_zero(a: np.ndarray) -> bool:
    return not any(bool(x) for x in a.reshape(-1))


def diagonal_inverse(a: np.ndarray) -> np.ndarray:
    """Inverse of a diagonal matrix of unit monomials (e.g. Cartan factors)."""
    n = a.shape[0]
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = a[i, i].monomial_inverse()
    return out


def exact_rank(a: np.ndarray) -> int:
    """Rank over the fraction field of Z[v, v^-1], by Bareiss elimination."""
    nr, nc = a.shape
    if nr == 0 or nc == 0:
        return 0
    m = [[a[i, j] for j in range(nc)] for i in range(nr)]
    rank = 0
    prev = ONE
    for c in range(nc):
        pivot_row = next((i for i in range(rank, nr) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, nr):
            row_i, row_r = m[i], m[rank]
            head = row_i[c]
            for j in range(c + 1, nc):
                row_i[j] = exact_div(piv * row_i[j] - head * row_r[j], prev)
            row_i[c] = ZERO
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


def kernel_dimension(a: np.ndarray) -> int:
    return a.shape[1] - exact_rank(a)
