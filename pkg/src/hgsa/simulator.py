"""Dense statevector simulation, expectation values, and FD gradients.

Amplitude index convention: basis state b sits at index sum_j bit_j * 2^j,
i.e. qubit 0 is the least significant bit.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .circuit import Circuit, Gate
from .dense import single_gate_matrix
from .pauli import PauliString, QubitHamiltonian

FD_STEP = 1e-4


class StateVector:
    """Mutable 2^n complex amplitude vector."""

    __slots__ = ("n", "data")

    def __init__(self, n: int, data: np.ndarray | None = None):
        self.n = n
        if data is None:
            self.data = np.zeros(2**n, dtype=np.complex128)
            self.data[0] = 1.0
        else:
            if data.shape != (2**n,):
                raise ValueError("amplitude vector has wrong length")
            self.data = np.asarray(data, dtype=np.complex128)

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.data.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.data))

    def apply(self, g: Gate) -> "StateVector":
        """In-place unitary update; returns self for chaining."""
        if g.kind == "cz":
            a, b = g.qubits
            idx = np.arange(2**self.n)
            mask = ((idx >> a) & 1) & ((idx >> b) & 1)
            self.data[mask == 1] *= -1.0
        elif g.kind == "cx":
            c, t = g.qubits
            idx = np.arange(2**self.n)
            src = np.nonzero((idx >> c) & 1)[0]
            # fancy-index read copies, so the in-place permutation is safe
            self.data[src] = self.data[src ^ (1 << t)]
        else:
            (q,) = g.qubits
            u = single_gate_matrix(g.kind, g.angle)
            lo = 1 << q
            hi = 2**self.n // (2 * lo)
            view = self.data.reshape(hi, 2, lo)
            self.data = np.einsum("ab,hbl->hal", u, view).reshape(-1)
        return self

    def apply_circuit(self, c: Circuit) -> "StateVector":
        for g in c.gates:
            self.apply(g)
        return self


def init_basis(n: int, bits: str) -> StateVector:
    """Computational basis state for an occupation bitstring."""
    if len(bits) != n:
        raise ValueError(f"bitstring length {len(bits)} != n={n}")
    if set(bits) - {"0", "1"}:
        raise ValueError("bitstring must contain only 0/1")
    s = StateVector(n)
    s.data[0] = 0.0
    s.data[sum(1 << j for j, ch in enumerate(bits) if ch == "1")] = 1.0
    return s


def pauli_action(p: PauliString, psi: np.ndarray) -> np.ndarray:
    """P |psi> via index xor and sign vector, no matrix materialized."""
    dim = psi.shape[0]
    idx = np.arange(dim, dtype=np.int64)
    parity = np.bitwise_count(idx & np.int64(p.z)) & 1
    vals = np.where(parity == 1, -1.0 + 0j, 1.0 + 0j)
    vals *= (1j) ** ((p.x & p.z).bit_count())
    if p.sign:
        vals = -vals
    out = np.zeros_like(psi)
    out[idx ^ np.int64(p.x)] = vals * psi
    return out


def expectation(s: StateVector, h: QubitHamiltonian) -> float:
    """<s|H|s> summed term-wise; asserts the imaginary residue is ~0."""
    if h.n != s.n:
        raise ValueError(f"dimension mismatch: state n={s.n}, H n={h.n}")
    acc = 0.0 + 0.0j
    for c, p in h.terms:
        acc += c * np.vdot(s.data, pauli_action(p, s.data))
    if abs(acc.imag) >= 1e-9:
        raise AssertionError(f"expectation has imaginary residue {acc.imag}")
    return float(acc.real) + h.offset


def pauli_expectation(s: StateVector, p: PauliString) -> float:
    val = np.vdot(s.data, pauli_action(p, s.data))
    if abs(val.imag) >= 1e-9:
        raise AssertionError("Pauli expectation has imaginary residue")
    return float(val.real)


def gradient(
    f: Callable[[np.ndarray], float], theta: np.ndarray, step: float = FD_STEP
) -> np.ndarray:
    """Central finite differences, one coordinate at a time."""
    theta = np.asarray(theta, dtype=float)
    out = np.empty_like(theta)
    for i in range(theta.size):
        up = theta.copy()
        dn = theta.copy()
        up[i] += step
        dn[i] -= step
        out[i] = (f(up) - f(dn)) / (2.0 * step)
    return out
