"""Ansatz assembly, identity-block initialization, optimization, and the
exact-diagonalization reference oracle.

One ansatz block per commuting group: the group's diagonalizer Uz
conjugates a layer of arbitrary single-qubit rotations,

    block_i = Uz_i . R(theta_i) . Uz_i^dag,

applied to the reference state in group order (highest 1-norm first).
Each qubit's rotation is Rz(a) Ry(b) Rz(g) Ry(-b) Rz(-a), which is the
identity at g = 0 for any a, b; initialization draws a, b uniformly and
sets g ~ 1e-6 so every block starts as a near-identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bfgs import BfgsResult, OptimizationTrace, minimize_bfgs
from .circuit import Circuit
from .engine import FD_STEP, CompiledPlan
from .graphsynth import GraphForm, build_diagonalizer, to_graph_form, verify_diagonalization
from .grouping import GroupedHamiltonian, partition
from .pauli import QubitHamiltonian
from .stabilizer import (
    StabilizerTableau,
    complete_generators,
    independent_generators,
    sign_fix,
)

GAMMA_INIT = 1e-6


@dataclass
class AnsatzBlock:
    group_id: int
    uz: Circuit
    uz_dag: Circuit
    graph_form: GraphForm
    tableau: StabilizerTableau  # sign-fixed, full rank


@dataclass
class AnsatzPlan:
    n: int
    hf: str
    blocks: list[AnsatzBlock]
    layers: int
    grouped: GroupedHamiltonian
    _compiled: dict = field(default_factory=dict, repr=False)

    @property
    def num_parameters(self) -> int:
        return self.layers * len(self.blocks) * 3 * self.n

    def parameter_index(self, layer: int, block: int, qubit: int, angle: int) -> int:
        return ((layer * len(self.blocks) + block) * self.n + qubit) * 3 + angle

    def compiled(self, h: QubitHamiltonian) -> CompiledPlan:
        key = id(h)
        if key not in self._compiled:
            self._compiled[key] = CompiledPlan(self, h)
        return self._compiled[key]


def build_ansatz(h: QubitHamiltonian, layers: int = 1, group_order: str = "desc") -> AnsatzPlan:
    """Run the full synthesis pipeline and assemble blocks in group order."""
    if layers < 1:
        raise ValueError("layers must be >= 1")
    grouped = partition(h, order=group_order)
    blocks: list[AnsatzBlock] = []
    for gid, group in enumerate(grouped.groups):
        try:
            tableau = complete_generators(independent_generators(group))
            gf = to_graph_form(tableau)
            uz = build_diagonalizer(gf)
            if not verify_diagonalization(uz, group):
                raise AssertionError("diagonalizer failed verification")
            fixed = sign_fix(tableau, uz, h.hf)
        except Exception as exc:
            raise RuntimeError(f"ansatz synthesis failed for group {gid}: {exc}") from exc
        blocks.append(
            AnsatzBlock(group_id=gid, uz=uz, uz_dag=uz.inverse(), graph_form=gf, tableau=fixed)
        )
    return AnsatzPlan(n=h.n, hf=h.hf, blocks=blocks, layers=layers, grouped=grouped)


def init_params(plan: AnsatzPlan, seed: int, gamma: float = GAMMA_INIT) -> np.ndarray:
    """Identity-block start: alpha, beta uniform in [0, 2pi); gamma fixed."""
    rng = np.random.default_rng(seed)
    theta = np.empty(plan.num_parameters, dtype=float)
    theta[0::3] = rng.uniform(0.0, 2.0 * math.pi, size=plan.num_parameters // 3)
    theta[1::3] = rng.uniform(0.0, 2.0 * math.pi, size=plan.num_parameters // 3)
    theta[2::3] = gamma
    return theta


def energy(plan: AnsatzPlan, theta: np.ndarray, h: QubitHamiltonian) -> float:
    """Objective <HF| U(theta)^dag H U(theta) |HF> plus the identity offset."""
    return plan.compiled(h).energy(np.asarray(theta, dtype=float))


def gradient(plan: AnsatzPlan, theta: np.ndarray, h: QubitHamiltonian,
             step: float = FD_STEP) -> np.ndarray:
    return plan.compiled(h).gradient(np.asarray(theta, dtype=float), step)


@dataclass
class VqeResult:
    theta: np.ndarray
    energy: float
    trace: OptimizationTrace


def optimize(
    plan: AnsatzPlan,
    theta0: np.ndarray,
    h: QubitHamiltonian,
    max_iter: int = 200,
    gtol: float = 1e-6,
    callback=None,
) -> VqeResult:
    cp = plan.compiled(h)
    result: BfgsResult = minimize_bfgs(
        cp.energy, cp.gradient, np.asarray(theta0, dtype=float),
        max_iter=max_iter, gtol=gtol, callback=callback,
    )
    return VqeResult(theta=result.x, energy=result.fun, trace=result.trace)


def hamiltonian_dense(h: QubitHamiltonian) -> np.ndarray:
    """Dense matrix assembled term-wise through index arithmetic."""
    dim = 1 << h.n
    idx = np.arange(dim, dtype=np.int64)
    out = np.zeros((dim, dim), dtype=np.complex128)
    for c, p in h.terms:
        parity = np.bitwise_count(idx & np.int64(p.z)) & 1
        vals = c * (1j) ** ((p.x & p.z).bit_count()) * np.where(parity == 1, -1.0, 1.0)
        out[idx ^ np.int64(p.x), idx] += vals
    out[idx, idx] += h.offset
    return out


def fci_energy(h: QubitHamiltonian) -> float:
    """Smallest eigenvalue of the qubit Hamiltonian (dense eigensolver)."""
    if h.n > 14:
        raise ValueError(f"n={h.n} too large for dense diagonalization")
    eigs = np.linalg.eigvalsh(hamiltonian_dense(h))
    return float(eigs[0])


def hf_energy(h: QubitHamiltonian) -> float:
    """Reference energy <hf|H|hf>; only diagonal terms contribute."""
    bits = sum(1 << j for j, ch in enumerate(h.hf) if ch == "1")
    acc = h.offset
    for c, p in h.terms:
        if p.is_diagonal:
            acc += c * (-1.0 if ((p.z & bits).bit_count() & 1) else 1.0)
    return float(acc)
