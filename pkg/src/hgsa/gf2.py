"""Dense GF(2) linear algebra on numpy uint8 matrices."""

from __future__ import annotations

import numpy as np


def row_echelon(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Row-echelon form over GF(2); returns (reduced copy, pivot columns)."""
    r = (np.asarray(m, dtype=np.uint8) % 2).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        hit = np.nonzero(r[pr:, c])[0]
        if hit.size == 0:
            continue
        sel = pr + hit[0]
        if sel != pr:
            r[[pr, sel]] = r[[sel, pr]]
        for other in range(rows):
            if other != pr and r[other, c]:
                r[other] ^= r[pr]
        pivots.append(c)
        pr += 1
        if pr == rows:
            break
    return r, pivots


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(row_echelon(m)[1])


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution x of x @ a = b over GF(2), or None if inconsistent.

    a has shape (k, w) with rows as basis vectors, b shape (w,).
    """
    a = np.asarray(a, dtype=np.uint8) % 2
    b = np.asarray(b, dtype=np.uint8) % 2
    k = a.shape[0]
    aug = np.concatenate([a.T, b[:, None]], axis=1).astype(np.uint8)
    red, pivots = row_echelon(aug)
    x = np.zeros(k, dtype=np.uint8)
    for i, c in enumerate(pivots):
        if c == k:
            return None
        x[c] = red[i, k]
    # r rows beyond the pivots must be consistent (all zero) by construction
    return x


def null_space(m: np.ndarray) -> np.ndarray:
    """Basis (rows) of {v : m @ v = 0 mod 2}; shape (dim, cols)."""
    m = np.asarray(m, dtype=np.uint8) % 2
    rows, cols = m.shape
    red, pivots = row_echelon(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = red[r, f]
    return basis
