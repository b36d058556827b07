# src/brauerwalk/oracle/field.py

from typing import List, Tuple

import numpy as np

from ..core.errors import OracleError

DEFAULT_PRIME = 32003


def mod_p(A, p: int) -> np.ndarray:
    return np.asarray(np.asarray(A, dtype=np.int64) % p, dtype=np.int64)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def inv_mod_scalar(a, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise OracleError("zero has no inverse")
    return pow(a, p - 2, p)


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    if A.shape[1] == 0 or B.shape[0] == 0:
        return zeros(A.shape[0], B.shape[1])
    return mod_p(A @ B, p)


def chain_mod(matrices: List[np.ndarray], size: int, p: int) -> np.ndarray:
    """Product M_k ... M_1 of a list [M_1, ..., M_k]; the identity of `size` when empty."""
    result = identity(size)
    for M in matrices:
        result = matmul_mod(M, result, p)
    return result


def rref_mod(aug: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """RREF over GF(p). Returns (reduced matrix, pivot columns)."""

    A = mod_p(aug, p).copy()
    m, n = A.shape
    r = 0
    piv_cols: List[int] = []
    for c in range(n):
        if r >= m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r, :] = (A[r, :] * inv_mod_scalar(A[r, c], p)) % p
        factors = A[:, c].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            A[rows, :] = (A[rows, :] - np.outer(factors[rows], A[r, :])) % p
        piv_cols.append(c)
        r += 1
    return A, piv_cols


def rank_mod(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    _, piv = rref_mod(A, p)
    return len(piv)


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace basis of A over GF(p); columns form a basis."""

    m, n = A.shape
    if n == 0:
        return zeros(0, 0)
    if m == 0:
        return identity(n)
    R, piv_cols = rref_mod(A, p)
    piv_set = set(piv_cols)
    free = [j for j in range(n) if j not in piv_set]
    basis = zeros(n, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(piv_cols):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def column_basis(A: np.ndarray, p: int) -> np.ndarray:
    """Independent columns of A spanning its column space."""
    if A.shape[1] == 0:
        return zeros(A.shape[0], 0)
    _, piv = rref_mod(A, p)
    return mod_p(A[:, piv], p)


def solve_mod(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """One solution of A X = B over GF(p), free variables set to zero."""

    B = mod_p(b, p)
    vector = B.ndim == 1
    if vector:
        B = B.reshape(-1, 1)
    m, n = A.shape
    aug = np.concatenate([mod_p(A, p).reshape(m, n), B], axis=1)
    R, piv_cols = rref_mod(aug, p)
    if any(pc >= n for pc in piv_cols):
        raise OracleError("no solution to linear system over GF(p)")
    X = zeros(n, B.shape[1])
    for row, pc in enumerate(piv_cols):
        X[pc, :] = R[row, n:]
    return X.reshape(-1) if vector else X


def in_column_space(A: np.ndarray, v: np.ndarray, p: int) -> bool:
    if A.shape[1] == 0:
        return not np.any(mod_p(v, p))
    return rank_mod(np.column_stack([A, v]), p) == rank_mod(A, p)


def complement_basis(A: np.ndarray, n: int, p: int) -> np.ndarray:
    """Unit vectors completing the column space of A to the whole of GF(p)^n."""

    if A.shape[1] == 0:
        return identity(n)
    _, piv = rref_mod(np.concatenate([A, identity(n)], axis=1), p)
    chosen = [c - A.shape[1] for c in piv if c >= A.shape[1]]
    return identity(n)[:, chosen]


def det_mod(A: np.ndarray, p: int) -> int:

    n = A.shape[0]
    if A.shape != (n, n):
        raise OracleError("determinant of a non-square matrix")
    M = mod_p(A, p).copy()
    det = 1
    for c in range(n):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            det = (-det) % p
        det = (det * int(M[c, c])) % p
        inv = inv_mod_scalar(M[c, c], p)
        below = M[c + 1:, c].copy()
        if below.size:
            M[c + 1:, :] = (M[c + 1:, :] - np.outer((below * inv) % p, M[c, :])) % p
    return det


def inv_mod_mat(A: np.ndarray, p: int) -> np.ndarray:
    """Gauss-Jordan inverse over GF(p). Raises if singular."""
    n = A.shape[0]
    R, _ = rref_mod(np.concatenate([mod_p(A, p), identity(n)], axis=1), p)
    if not np.array_equal(R[:, :n], identity(n)):
        raise OracleError("matrix not invertible mod p")
    return R[:, n:]


def is_nilpotent(A: np.ndarray, p: int) -> bool:
    n = A.shape[0]
    P = mod_p(A, p)
    steps = 0
    while np.any(P):
        steps += 1
        if steps > n:
            return False
        P = matmul_mod(P, A, p)
    return True
