"""Graph-state canonical form and diagonalization-circuit synthesis.

Transforms a full-rank stabilizer tableau into graph form (adjacency
matrix + per-qubit local Cliffords) and emits the circuit

    Uz = (local ops) (CZ per edge) (H on all qubits)

whose conjugation Uz^dag P Uz turns every group member into a Z/I-only
string.  Also hosts the Clifford conjugation engine used for
verification throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .circuit import Circuit, Gate
from .grouping import CommutingGroup
from .pauli import PauliString, multiply
from .stabilizer import StabilizerTableau


def _apply_gate_heisenberg(g: Gate, p: PauliString) -> PauliString:
    """One-gate Heisenberg update g P g^dag on the symplectic encoding."""
    n, x, z, s = p.n, p.x, p.z, p.sign
    kind = g.kind
    if kind == "h":
        (q,) = g.qubits
        bq = 1 << q
        xq, zq = x & bq, z & bq
        s ^= 1 if (xq and zq) else 0
        if bool(xq) != bool(zq):
            x ^= bq
            z ^= bq
    elif kind == "s":
        (q,) = g.qubits
        bq = 1 << q
        if x & bq:
            s ^= 1 if (z & bq) else 0
            z ^= bq
    elif kind == "sdg":
        (q,) = g.qubits
        bq = 1 << q
        if x & bq:
            s ^= 0 if (z & bq) else 1
            z ^= bq
    elif kind == "x":
        (q,) = g.qubits
        s ^= 1 if (z >> q) & 1 else 0
    elif kind == "y":
        (q,) = g.qubits
        s ^= ((x >> q) ^ (z >> q)) & 1
    elif kind == "z":
        (q,) = g.qubits
        s ^= (x >> q) & 1
    elif kind == "cz":
        a, b = g.qubits
        xa, xb = (x >> a) & 1, (x >> b) & 1
        za, zb = (z >> a) & 1, (z >> b) & 1
        s ^= xa & xb & (za ^ zb)
        z ^= (xb << a) | (xa << b)
    elif kind == "cx":
        c, t = g.qubits
        xc, xt = (x >> c) & 1, (x >> t) & 1
        zc, zt = (z >> c) & 1, (z >> t) & 1
        s ^= xc & zt & (xt ^ zc ^ 1)
        x ^= xc << t
        z ^= zt << c
    else:
        raise ValueError(f"non-Clifford gate {kind!r} in conjugation")
    return PauliString(n, x, z, s)


def heisenberg(c: Circuit, p: PauliString) -> PauliString:
    """U P U^dag for the circuit unitary U (gates applied in list order)."""
    for g in c.gates:
        p = _apply_gate_heisenberg(g, p)
    return p


def conjugate_pauli(c: Circuit, p: PauliString) -> PauliString:
    """U^dag P U with exact sign tracking; rejects non-Clifford circuits."""
    if not c.is_clifford:
        raise ValueError("conjugation requires a Clifford-only circuit")
    return heisenberg(c.inverse(), p)


@dataclass(frozen=True)
class GraphForm:
    n: int
    adjacency: np.ndarray  # (n, n) uint8, symmetric, zero diagonal
    local_ops: tuple[tuple[Gate, ...], ...]  # per-qubit gates, application order
    source: StabilizerTableau

    def edges(self) -> list[tuple[int, int]]:
        n = self.n
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i, j]]


def _x_matrix(rows: list[PauliString], n: int) -> np.ndarray:
    m = np.zeros((len(rows), n), dtype=np.uint8)
    for i, p in enumerate(rows):
        for j in range(n):
            m[i, j] = (p.x >> j) & 1
    return m


def _z_matrix(rows: list[PauliString], n: int) -> np.ndarray:
    m = np.zeros((len(rows), n), dtype=np.uint8)
    for i, p in enumerate(rows):
        for j in range(n):
            m[i, j] = (p.z >> j) & 1
    return m


def _row_multiply(a: PauliString, b: PauliString) -> PauliString:
    """Product of two commuting tableau rows; phase must land on +/-1."""
    phase, c = multiply(a, b)
    if abs(phase.imag) > 1e-12:
        raise AssertionError("row product of commuting generators gave imaginary phase")
    return c.with_sign(0 if phase.real > 0 else 1)


def to_graph_form(t: StabilizerTableau) -> GraphForm:
    """Reduce a full-rank commuting tableau to graph-state canonical form.

    Records the single-qubit gates applied along the way; the stored
    local_ops are their inverse, so conjugating the canonical graph
    generators X_i prod_j Z_j^A_ij through local_ops reproduces the
    source row space with matching signs.
    """
    n = t.n
    if t.k != n:
        raise ValueError(f"tableau must have exactly n={n} rows, got {t.k}")
    rows = list(t.rows)
    applied: list[list[Gate]] = [[] for _ in range(n)]

    def apply_local(kind: str, q: int) -> None:
        g = Gate(kind, (q,))
        applied[q].append(g)
        for i in range(len(rows)):
            rows[i] = _apply_gate_heisenberg(g, rows[i])

    # 1) Hadamards until the X block reaches full rank; lowest qubit whose
    #    column swap strictly increases the rank wins each round.
    r = gf2.rank(_x_matrix(rows, n))
    while r < n:
        for q in range(n):
            trial = [_apply_gate_heisenberg(Gate("h", (q,)), p) for p in rows]
            tr = gf2.rank(_x_matrix(trial, n))
            if tr > r:
                apply_local("h", q)
                r = tr
                break
        else:
            raise AssertionError("no Hadamard increases X-block rank on valid input")

    # 2) Gauss-Jordan row reduction (Pauli row products) until X = identity.
    for col in range(n):
        pivot = next(i for i in range(col, n) if (rows[i].x >> col) & 1)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for i in range(n):
            if i != col and (rows[i].x >> col) & 1:
                rows[i] = _row_multiply(rows[i], rows[col])

    # 3) Z block must now be symmetric (commutativity); clear its diagonal.
    zm = _z_matrix(rows, n)
    if not np.array_equal(zm, zm.T):
        raise AssertionError("asymmetric Z block: input rows do not commute")
    for q in range(n):
        if zm[q, q]:
            apply_local("s", q)

    # 4) Clear remaining -1 signs with Z on the row's own qubit.
    for q in range(n):
        if rows[q].sign:
            apply_local("z", q)

    adjacency = _z_matrix(rows, n)
    if any(rows[q].sign for q in range(n)) or np.any(np.diag(adjacency)):
        raise AssertionError("canonicalization left signs or diagonal entries")

    local_ops = tuple(
        tuple(g.inverse() for g in reversed(seq)) for seq in applied
    )
    return GraphForm(n=n, adjacency=adjacency, local_ops=local_ops, source=t)


def build_diagonalizer(gf: GraphForm) -> Circuit:
    """Emit Uz = (local ops) . (CZ per edge) . (H on all qubits)."""
    c = Circuit(gf.n)
    for q in range(gf.n):
        c.h(q)
    for i, j in gf.edges():
        c.cz(i, j)
    for q in range(gf.n):
        c.extend(gf.local_ops[q])
    return c


def verify_diagonalization(uz: Circuit, group: CommutingGroup) -> bool:
    """True iff Uz^dag P Uz is Z/I-only for every group member."""
    return all(conjugate_pauli(uz, p).is_diagonal for p in group.paulis)
