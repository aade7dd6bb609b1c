"""Dense-matrix oracles: slow, obviously-correct reference implementations.

Everything here materializes 2^n objects and is meant for verification on
small n (tests, `verify_partition`, sign-fix projector checks), never for
the production evaluation path.
"""

from __future__ import annotations

import numpy as np

from .circuit import Circuit, Gate
from .pauli import PauliString, QubitHamiltonian

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)

_FACTOR = {"I": _I, "X": _X, "Y": _Y, "Z": _Z}


def single_gate_matrix(kind: str, angle: float | None = None) -> np.ndarray:
    if kind == "h":
        return _H
    if kind == "s":
        return _S
    if kind == "sdg":
        return _S.conj().T
    if kind == "x":
        return _X
    if kind == "y":
        return _Y
    if kind == "z":
        return _Z
    if kind == "rz":
        return np.array([[np.exp(-0.5j * angle), 0], [0, np.exp(0.5j * angle)]], dtype=complex)
    if kind == "ry":
        c, s = np.cos(angle / 2), np.sin(angle / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    raise ValueError(f"not a single-qubit gate: {kind}")


def pauli_matrix(p: PauliString) -> np.ndarray:
    """2^n x 2^n matrix; qubit 0 is the least significant index bit."""
    m = np.array([[1.0 + 0j]])
    for j in range(p.n):
        m = np.kron(_FACTOR[p.factor(j)], m)
    return -m if p.sign else m


def hamiltonian_matrix(h: QubitHamiltonian) -> np.ndarray:
    dim = 2**h.n
    out = np.zeros((dim, dim), dtype=complex)
    for c, p in h.terms:
        out += c * pauli_matrix(p)
    out += h.offset * np.eye(dim)
    return out


def _embed_single(u: np.ndarray, q: int, n: int) -> np.ndarray:
    # kron() puts its second argument on the fast index, so accumulating
    # factors left-to-right keeps qubit 0 least significant.
    m = np.array([[1.0 + 0j]])
    for j in range(n):
        m = np.kron(u if j == q else _I, m)
    return m


def gate_matrix(g: Gate, n: int) -> np.ndarray:
    dim = 2**n
    if g.kind in ("cz", "cx"):
        a, b = g.qubits
        m = np.eye(dim, dtype=complex)
        for idx in range(dim):
            if (idx >> a) & 1:
                if g.kind == "cz":
                    if (idx >> b) & 1:
                        m[idx, idx] = -1.0
                else:
                    m[idx, idx] = 0.0
                    m[idx ^ (1 << b), idx] = 1.0
        return m
    return _embed_single(single_gate_matrix(g.kind, g.angle), g.qubits[0], n)


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Full unitary; gates[0] is applied first (rightmost in the product)."""
    u = np.eye(2**c.n, dtype=complex)
    for g in c.gates:
        u = gate_matrix(g, c.n) @ u
    return u


def basis_state(n: int, bits: str) -> np.ndarray:
    if len(bits) != n:
        raise ValueError("bitstring length mismatch")
    idx = sum(1 << j for j, ch in enumerate(bits) if ch == "1")
    v = np.zeros(2**n, dtype=complex)
    v[idx] = 1.0
    return v


def commutator_is_zero(a: PauliString, b: PauliString, atol: float = 1e-12) -> bool:
    ma, mb = pauli_matrix(a), pauli_matrix(b)
    return bool(np.allclose(ma @ mb - mb @ ma, 0.0, atol=atol))
