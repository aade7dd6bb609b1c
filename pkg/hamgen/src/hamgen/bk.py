"""Bravyi-Kitaev encoding as a GF(2) basis change applied to JW operators.

The BK encoding sends an occupation vector x to qubit values b = B x
(mod 2) for the binary-tree partial-sum matrix B.  Any such invertible
linear map is a CNOT network on basis states, so the BK-transformed
Hamiltonian is the CNOT-network conjugation of the JW one.
"""

from __future__ import annotations

import numpy as np

from .fermion import PauliSum


def bk_matrix(n: int) -> np.ndarray:
    """Seeley-Love partial-sum matrix, truncated to n modes."""
    size = 1
    m = np.array([[1]], dtype=np.uint8)
    while size < n:
        top = np.hstack([m, np.zeros_like(m)])
        bottom = np.hstack([np.zeros_like(m), m])
        bottom[-1, :size] = 1
        m = np.vstack([top, bottom])
        size *= 2
    return m[:n, :n]


def cnot_network(m: np.ndarray) -> list[tuple[int, int]]:
    """Decompose invertible M over GF(2) into CNOTs realizing |x> -> |Mx>.

    Returned list is in application order; CNOT (control, target) adds
    bit `control` into bit `target`.
    """
    m = m.copy().astype(np.uint8)
    n = m.shape[0]
    ops: list[tuple[int, int]] = []  # row ops performed during reduction
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r, col]), None)
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        if pivot != col:
            # swap rows via three row-additions
            for a, b in ((pivot, col), (col, pivot), (pivot, col)):
                m[b] ^= m[a]
                ops.append((a, b))
        for r in range(n):
            if r != col and m[r, col]:
                m[r] ^= m[col]
                ops.append((col, r))
    if not np.array_equal(m, np.eye(n, dtype=np.uint8)):
        raise AssertionError("reduction did not reach identity")
    # reduction gave E_k ... E_1 M = I, so M = E_1 E_2 ... E_k; as a state
    # map the rightmost factor acts first
    return [(c, t) for (c, t) in reversed(ops)]


def _conjugate_cx(terms: dict, control: int, target: int) -> dict:
    out: dict[tuple[int, int], complex] = {}
    for (x, z), coeff in terms.items():
        xc, xt = (x >> control) & 1, (x >> target) & 1
        zc, zt = (z >> control) & 1, (z >> target) & 1
        if xc & zt & (xt ^ zc ^ 1):
            coeff = -coeff
        x ^= xc << target
        z ^= zt << control
        out[(x, z)] = out.get((x, z), 0.0) + coeff
    return out


def apply_encoding(ps: PauliSum, network: list[tuple[int, int]]) -> PauliSum:
    """Conjugate every Pauli term forward through the CNOT network."""
    terms = dict(ps.terms)
    for control, target in network:
        terms = _conjugate_cx(terms, control, target)
    return PauliSum(terms)


def encode_bits(m: np.ndarray, occupation: list[int]) -> str:
    """Qubit bitstring (position j = qubit j) for an occupation vector."""
    x = np.array(occupation, dtype=np.uint8)
    b = m @ x % 2
    return "".join(str(int(v)) for v in b)
