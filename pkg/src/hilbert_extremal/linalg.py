"""Dense linear algebra over a prime field with int64 numpy arrays.

Entries stay in ``[0, p)`` with ``p < 2**31`` so a single product fits in int64.
Matrix products split the right factor into 16-bit halves to keep sums exact.
"""
from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2147483647  # 2**31 - 1


def _check_prime(p: int):
    if p >= 2**31:
        raise ValueError("prime must be below 2**31 for int64 arithmetic")


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod ``p``; returns the nonzero rows and pivot columns."""
    _check_prime(p)
    M = np.array(M, dtype=np.int64) % p
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = M.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = (M[hit] - col[hit, None] * M[r]) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """``A @ B mod p`` without int64 overflow (inner dimension up to 2**16)."""
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    if A.shape[1] > 2**16:
        raise ValueError("inner dimension too large for split multiplication")
    lo = B & 0xFFFF
    hi = B >> 16
    out_hi = (A @ hi) % p
    out_lo = (A @ lo) % p
    return ((out_hi * 65536) % p + out_lo) % p


def normal_form(V: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Reduce the rows of ``V`` modulo the row space of an RREF ``basis``."""
    V = np.asarray(V, dtype=np.int64) % p
    if not pivots or V.size == 0:
        return V
    return (V - matmul_mod(V[:, pivots], basis, p)) % p


def left_kernel(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : x A = 0}`` mod ``p``, in RREF."""
    A = np.asarray(A, dtype=np.int64) % p
    m, n = A.shape
    aug = np.concatenate([A, np.eye(m, dtype=np.int64)], axis=1)
    R, piv = rref(aug, p)
    # rows whose pivot lies in the identity block have a zero A-part
    rows = [k for k, c in enumerate(piv) if c >= n]
    if not rows:
        return np.zeros((0, m), dtype=np.int64)
    return rref(R[rows, n:], p)[0]


def rank_exact(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix (fraction-free elimination)."""
    M = [list(r) for r in rows]
    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, nrows):
            M[i] = [(M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev for j in range(ncols)]
        prev = M[r][c]
        r += 1
    return r
