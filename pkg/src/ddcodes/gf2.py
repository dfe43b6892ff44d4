"""Dense GF(2) linear algebra on numpy uint8 arrays (values 0/1).

Elimination pivots on the leftmost available column, so reduced forms are
deterministic and two matrices span the same row space iff their reduced
forms are identical arrays.
"""
from __future__ import annotations

import numpy as np

__all__ = ["rref", "rank", "nullspace", "row_space_contains", "row_spaces_equal",
           "solve_in_rowspace"]


def rref(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2).

    Returns (R, pivot_cols) where R holds only the nonzero rows.
    """
    A = (np.asarray(M, dtype=np.uint8) & 1).copy()
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = np.nonzero(A[r:, c])[0]
        if hit.size == 0:
            continue
        p = r + hit[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        A[others] ^= A[r]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: np.ndarray) -> int:
    return rref(M)[0].shape[0]


def nullspace(M: np.ndarray) -> np.ndarray:
    """Basis (rows) of {v : M v^T = 0 over GF(2)}."""
    R, pivots = rref(M)
    cols = np.asarray(M).shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in zip(R, pivots):
            if row[f]:
                basis[i, p] = 1
    return basis


def row_space_contains(M: np.ndarray, v: np.ndarray) -> bool:
    """True iff v lies in the GF(2) row space of M."""
    R, pivots = rref(M)
    w = (np.asarray(v, dtype=np.uint8) & 1).copy()
    for row, p in zip(R, pivots):
        if w[p]:
            w ^= row
    return not w.any()


def row_spaces_equal(A: np.ndarray, B: np.ndarray) -> bool:
    Ra, _ = rref(A)
    Rb, _ = rref(B)
    return Ra.shape == Rb.shape and np.array_equal(Ra, Rb)


def solve_in_rowspace(M: np.ndarray, v: np.ndarray) -> np.ndarray | None:
    """Coefficients x with x @ M = v (mod 2), or None if v is outside the span."""
    A = (np.asarray(M, dtype=np.uint8) & 1).copy()
    rows = A.shape[0]
    aug = np.concatenate([A, np.eye(rows, dtype=np.uint8)], axis=1)
    R, pivots = rref(aug)
    cols = A.shape[1]
    w = (np.asarray(v, dtype=np.uint8) & 1).copy()
    x = np.zeros(rows, dtype=np.uint8)
    for row, p in zip(R, pivots):
        if p >= cols:
            break
        if w[p]:
            w ^= row[:cols]
            x ^= row[cols:]
    if w.any():
        return None
    return x
