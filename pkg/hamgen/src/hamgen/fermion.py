"""Fermionic machinery: active spaces, determinant CI, and JW/BK mapping.

Spin-orbital convention: index 2p is the alpha spin of spatial orbital p,
index 2p+1 the beta spin.  Qubit j of the emitted Hamiltonian corresponds
to spin orbital j after the chosen fermion-to-qubit encoding.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


def mo_transform(c, hcore, eri):
    h_mo = c.T @ hcore @ c
    eri_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", c, c, c, c, eri, optimize=True)
    return h_mo, eri_mo


def active_space(h_mo, eri_mo, e_nuc, n_electrons, n_frozen, n_active):
    """Freeze the lowest n_frozen spatial MOs; return effective integrals.

    Returns (h_eff, eri_act, core_energy, n_active_electrons) where the
    core energy folds the nuclear repulsion and the frozen-shell mean
    field into a constant.
    """
    n_mo = h_mo.shape[0]
    if n_frozen + n_active > n_mo:
        raise ValueError("active space exceeds orbital count")
    core = list(range(n_frozen))
    act = list(range(n_frozen, n_frozen + n_active))

    e_core = e_nuc
    for i in core:
        e_core += 2.0 * h_mo[i, i]
        for j in core:
            e_core += 2.0 * eri_mo[i, i, j, j] - eri_mo[i, j, j, i]

    h_eff = np.zeros((n_active, n_active))
    for a, p in enumerate(act):
        for b, q in enumerate(act):
            val = h_mo[p, q]
            for i in core:
                val += 2.0 * eri_mo[p, q, i, i] - eri_mo[p, i, i, q]
            h_eff[a, b] = val

    eri_act = eri_mo[np.ix_(act, act, act, act)]
    n_act_elec = n_electrons - 2 * n_frozen
    if n_act_elec < 0:
        raise ValueError("more frozen electrons than electrons present")
    return h_eff, eri_act, e_core, n_act_elec


# ---------------------------------------------------------------------------
# determinant-space CI (the reference oracle; never touches qubit operators)


def _apply_annihilate(bits: int, q: int):
    if not (bits >> q) & 1:
        return None
    sign = -1.0 if bin(bits & ((1 << q) - 1)).count("1") % 2 else 1.0
    return bits ^ (1 << q), sign


def _apply_create(bits: int, q: int):
    if (bits >> q) & 1:
        return None
    sign = -1.0 if bin(bits & ((1 << q) - 1)).count("1") % 2 else 1.0
    return bits | (1 << q), sign


def _apply_ops(bits: int, ops) -> tuple[int, float] | None:
    """Apply a*/a sequence right-to-left; ops = [(index, is_creation), ...]."""
    sign = 1.0
    for q, create in reversed(ops):
        res = _apply_create(bits, q) if create else _apply_annihilate(bits, q)
        if res is None:
            return None
        bits, s = res
        sign *= s
    return bits, sign


def fci_ground_energy(h_eff, eri_act, core_energy, n_alpha, n_beta) -> float:
    """Exact diagonalization over the fixed (n_alpha, n_beta) sector.

    Works directly on spin-orbital occupation bitstrings with elementary
    creation/annihilation operators, independent of any qubit encoding.
    """
    n_orb = h_eff.shape[0]
    n_so = 2 * n_orb
    alphas = [sum(1 << (2 * o) for o in occ) for occ in combinations(range(n_orb), n_alpha)]
    betas = [sum(1 << (2 * o + 1) for o in occ) for occ in combinations(range(n_orb), n_beta)]
    dets = [a | b for a in alphas for b in betas]
    index = {d: i for i, d in enumerate(dets)}
    dim = len(dets)
    ham = np.zeros((dim, dim))

    so_h = []
    for p in range(n_orb):
        for q in range(n_orb):
            if h_eff[p, q] != 0.0:
                for spin in (0, 1):
                    so_h.append((2 * p + spin, 2 * q + spin, h_eff[p, q]))
    so_v = []
    for p in range(n_orb):
        for q in range(n_orb):
            for r in range(n_orb):
                for s in range(n_orb):
                    val = 0.5 * eri_act[p, q, r, s]
                    if val == 0.0:
                        continue
                    for sp in (0, 1):
                        for tp in (0, 1):
                            so_v.append(
                                ((2 * p + sp, True), (2 * r + tp, True),
                                 (2 * s + tp, False), (2 * q + sp, False), val)
                            )

    for col, det in enumerate(dets):
        for p, q, val in so_h:
            res = _apply_ops(det, [(p, True), (q, False)])
            if res is not None and res[0] in index:
                ham[index[res[0]], col] += val * res[1]
        for op1, op2, op3, op4, val in so_v:
            res = _apply_ops(det, [op1, op2, op3, op4])
            if res is not None and res[0] in index:
                ham[index[res[0]], col] += val * res[1]

    return float(np.linalg.eigvalsh(ham)[0] + core_energy)


def hf_determinant_energy(h_eff, eri_act, core_energy, n_alpha, n_beta) -> float:
    """Energy of the aufbau determinant (lowest spatial orbitals filled)."""
    occ_a = list(range(n_alpha))
    occ_b = list(range(n_beta))
    e = core_energy
    for i in occ_a + occ_b:
        e += h_eff[i, i]
    for i in occ_a:
        for j in occ_a:
            e += 0.5 * (eri_act[i, i, j, j] - eri_act[i, j, j, i])
    for i in occ_b:
        for j in occ_b:
            e += 0.5 * (eri_act[i, i, j, j] - eri_act[i, j, j, i])
    for i in occ_a:
        for j in occ_b:
            e += eri_act[i, i, j, j]
    return float(e)


# ---------------------------------------------------------------------------
# Pauli-sum accumulator and the Jordan-Wigner map

_PHASE_TABLE = {0: 1.0, 1: 1j, 2: -1.0, 3: -1j}


class PauliSum:
    """Sparse sum of Pauli strings keyed by (x_bits, z_bits)."""

    def __init__(self, terms: dict[tuple[int, int], complex] | None = None):
        self.terms = terms or {}

    @classmethod
    def scalar(cls, value: complex) -> "PauliSum":
        return cls({(0, 0): complex(value)})

    def add(self, other: "PauliSum", factor: complex = 1.0) -> "PauliSum":
        for key, val in other.terms.items():
            new = self.terms.get(key, 0.0) + factor * val
            if abs(new) < 1e-14:
                self.terms.pop(key, None)
            else:
                self.terms[key] = new
        return self

    def __mul__(self, other: "PauliSum") -> "PauliSum":
        out: dict[tuple[int, int], complex] = {}
        for (x1, z1), c1 in self.terms.items():
            for (x2, z2), c2 in other.terms.items():
                x, z = x1 ^ x2, z1 ^ z2
                g = (bin(x1 & z1).count("1") + bin(x2 & z2).count("1")
                     + 2 * bin(z1 & x2).count("1") - bin(x & z).count("1")) % 4
                val = c1 * c2 * _PHASE_TABLE[g]
                key = (x, z)
                new = out.get(key, 0.0) + val
                if abs(new) < 1e-14:
                    out.pop(key, None)
                else:
                    out[key] = new
        return PauliSum(out)


def jw_lower(q: int) -> PauliSum:
    """Annihilation operator a_q: Z-parity string then (X + iY)/2."""
    parity = (1 << q) - 1
    return PauliSum({
        (1 << q, parity): 0.5,
        (1 << q, parity | (1 << q)): 0.5j,
    })


def jw_raise(q: int) -> PauliSum:
    parity = (1 << q) - 1
    return PauliSum({
        (1 << q, parity): 0.5,
        (1 << q, parity | (1 << q)): -0.5j,
    })


def build_qubit_hamiltonian(h_eff, eri_act, core_energy) -> PauliSum:
    """Second-quantized active-space H as a Jordan-Wigner Pauli sum."""
    n_orb = h_eff.shape[0]
    total = PauliSum.scalar(core_energy)
    for p in range(n_orb):
        for q in range(n_orb):
            if abs(h_eff[p, q]) < 1e-14:
                continue
            for spin in (0, 1):
                total.add(jw_raise(2 * p + spin) * jw_lower(2 * q + spin), h_eff[p, q])
    for p in range(n_orb):
        for q in range(n_orb):
            for r in range(n_orb):
                for s in range(n_orb):
                    val = 0.5 * eri_act[p, q, r, s]
                    if abs(val) < 1e-14:
                        continue
                    for sp in (0, 1):
                        for tp in (0, 1):
                            a, b = 2 * p + sp, 2 * r + tp
                            c, d = 2 * s + tp, 2 * q + sp
                            if a == b or c == d:
                                continue
                            op = jw_raise(a) * jw_raise(b) * jw_lower(c) * jw_lower(d)
                            total.add(op, val)
    return total
