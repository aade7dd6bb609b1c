"""Compiled evaluation kernels for the ansatz objective.

A plan compiles to flat numpy arrays: per-block fused single-qubit
matrices for the diagonalizer's local layers, one diagonal +/-1 vector
per block for its CZ layer, and packed Hamiltonian term data.  The
middle rotation layer folds the two Hadamard layers of Uz-dagger/Uz
into a single 2x2 per qubit, so one ansatz block costs 3n single-qubit
sweeps plus two diagonal multiplies regardless of edge count.

Finite-difference gradients parallelize over coordinates with prange,
reusing cached prefix states (the state just before each block).
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

from .dense import single_gate_matrix

FD_STEP = 1e-4


@njit(cache=True, inline="always")
def _apply_single(psi, q, m00, m01, m10, m11):
    step = 1 << q
    dim = psi.shape[0]
    for base in range(0, dim, step << 1):
        for off in range(step):
            i0 = base + off
            i1 = i0 + step
            a0 = psi[i0]
            a1 = psi[i1]
            psi[i0] = m00 * a0 + m01 * a1
            psi[i1] = m10 * a0 + m11 * a1


@njit(cache=True, inline="always")
def _apply_diag(psi, d):
    for b in range(psi.shape[0]):
        if d[b] < 0:
            psi[b] = -psi[b]


@njit(cache=True, inline="always")
def _fused_rotation(alpha, beta, gamma):
    """H . Rv(alpha, beta, gamma) . H as four complex entries."""
    vx = np.sin(beta) * np.cos(alpha)
    vy = np.sin(beta) * np.sin(alpha)
    vz = np.cos(beta)
    c = np.cos(gamma / 2.0)
    s = np.sin(gamma / 2.0)
    m00 = c - 1j * s * vz
    m01 = -s * vy - 1j * s * vx
    m10 = s * vy - 1j * s * vx
    m11 = c + 1j * s * vz
    f00 = 0.5 * (m00 + m01 + m10 + m11)
    f01 = 0.5 * (m00 - m01 + m10 - m11)
    f10 = 0.5 * (m00 + m01 - m10 - m11)
    f11 = 0.5 * (m00 - m01 - m10 + m11)
    return f00, f01, f10, f11


@njit(cache=True)
def _apply_block(psi, theta, block_index, n, m, pre, post, diag):
    k = block_index % m
    base = block_index * 3 * n
    for q in range(n):
        _apply_single(psi, q, pre[k, q, 0, 0], pre[k, q, 0, 1], pre[k, q, 1, 0], pre[k, q, 1, 1])
    _apply_diag(psi, diag[k])
    for q in range(n):
        a = theta[base + 3 * q]
        b = theta[base + 3 * q + 1]
        g = theta[base + 3 * q + 2]
        f00, f01, f10, f11 = _fused_rotation(a, b, g)
        _apply_single(psi, q, f00, f01, f10, f11)
    _apply_diag(psi, diag[k])
    for q in range(n):
        _apply_single(psi, q, post[k, q, 0, 0], post[k, q, 0, 1], post[k, q, 1, 0], post[k, q, 1, 1])


@njit(cache=True)
def _expectation(psi, xs, zs, facs, offset):
    acc = offset
    dim = psi.shape[0]
    for t in range(xs.shape[0]):
        x = xs[t]
        z = zs[t]
        s = 0.0 + 0.0j
        for b in range(dim):
            bb = b ^ x
            v = bb & z
            cnt = 0
            while v:
                v &= v - 1
                cnt += 1
            if cnt & 1:
                s -= np.conj(psi[b]) * psi[bb]
            else:
                s += np.conj(psi[b]) * psi[bb]
        acc += (facs[t] * s).real
    return acc


@njit(cache=True)
def _energy(theta, n_blocks, n, m, pre, post, diag, hf_index, xs, zs, facs, offset):
    dim = 1 << n
    psi = np.zeros(dim, dtype=np.complex128)
    psi[hf_index] = 1.0
    for kk in range(n_blocks):
        _apply_block(psi, theta, kk, n, m, pre, post, diag)
    return _expectation(psi, xs, zs, facs, offset)


@njit(cache=True)
def _prefix_states(theta, n_blocks, n, m, pre, post, diag, hf_index):
    dim = 1 << n
    states = np.zeros((n_blocks, dim), dtype=np.complex128)
    psi = np.zeros(dim, dtype=np.complex128)
    psi[hf_index] = 1.0
    for kk in range(n_blocks):
        states[kk] = psi
        _apply_block(psi, theta, kk, n, m, pre, post, diag)
    return states


@njit(cache=True, parallel=True)
def _gradient(theta, step, n_blocks, n, m, pre, post, diag, hf_index, xs, zs, facs, offset):
    n_params = theta.shape[0]
    grad = np.empty(n_params, dtype=np.float64)
    if n_blocks == 0:
        for i in prange(n_params):
            grad[i] = 0.0
        return grad
    prefix = _prefix_states(theta, n_blocks, n, m, pre, post, diag, hf_index)
    per_block = 3 * n
    for i in prange(n_params):
        kk = i // per_block
        local = theta.copy()
        vals = np.empty(2, dtype=np.float64)
        for side in range(2):
            local[i] = theta[i] + (step if side == 0 else -step)
            psi = prefix[kk].copy()
            for blk in range(kk, n_blocks):
                _apply_block(psi, local, blk, n, m, pre, post, diag)
            vals[side] = _expectation(psi, xs, zs, facs, offset)
        local[i] = theta[i]
        grad[i] = (vals[0] - vals[1]) / (2.0 * step)
    return grad


class CompiledPlan:
    """Flattened plan + Hamiltonian arrays ready for the kernels."""

    def __init__(self, plan, h):
        n = plan.n
        m = len(plan.blocks)
        self.n = n
        self.m = m
        self.layers = plan.layers
        self.n_blocks = plan.layers * m
        self.n_params = self.n_blocks * 3 * n
        dim = 1 << n

        self.pre = np.zeros((max(m, 1), n, 2, 2), dtype=np.complex128)
        self.post = np.zeros((max(m, 1), n, 2, 2), dtype=np.complex128)
        self.diag = np.ones((max(m, 1), dim), dtype=np.float64)
        idx = np.arange(dim, dtype=np.int64)
        for k, block in enumerate(plan.blocks):
            gf = block.graph_form
            for q in range(n):
                u = np.eye(2, dtype=np.complex128)
                for g in gf.local_ops[q]:
                    u = single_gate_matrix(g.kind, g.angle) @ u
                self.post[k, q] = u
                self.pre[k, q] = u.conj().T
            par = np.zeros(dim, dtype=np.int64)
            for i, j in gf.edges():
                par ^= ((idx >> i) & 1) & ((idx >> j) & 1)
            self.diag[k] = 1.0 - 2.0 * par

        self.hf_index = sum(1 << j for j, ch in enumerate(plan.hf) if ch == "1")
        self.xs = np.array([p.x for _, p in h.terms], dtype=np.int64)
        self.zs = np.array([p.z for _, p in h.terms], dtype=np.int64)
        self.facs = np.array(
            [c * (1j) ** ((p.x & p.z).bit_count()) for c, p in h.terms],
            dtype=np.complex128,
        )
        self.offset = float(h.offset)

    def energy(self, theta: np.ndarray) -> float:
        theta = np.ascontiguousarray(theta, dtype=np.float64)
        if theta.shape != (self.n_params,):
            raise ValueError(f"expected {self.n_params} parameters, got {theta.shape}")
        return float(
            _energy(theta, self.n_blocks, self.n, max(self.m, 1), self.pre, self.post,
                    self.diag, self.hf_index, self.xs, self.zs, self.facs, self.offset)
        )

    def gradient(self, theta: np.ndarray, step: float = FD_STEP) -> np.ndarray:
        theta = np.ascontiguousarray(theta, dtype=np.float64)
        if theta.shape != (self.n_params,):
            raise ValueError(f"expected {self.n_params} parameters, got {theta.shape}")
        return np.asarray(
            _gradient(theta, step, self.n_blocks, self.n, max(self.m, 1), self.pre,
                      self.post, self.diag, self.hf_index, self.xs, self.zs, self.facs,
                      self.offset)
        )
