"""End-to-end fixture generation: geometry -> integrals -> RHF -> active
space -> Bravyi-Kitaev qubit Hamiltonian -> `.ham` text."""

from __future__ import annotations

import numpy as np

from . import bk, fermion, integrals
from .molecules import MOLECULES, MoleculeSpec
from .scf import rhf

IMAG_TOLERANCE = 1e-10
COEFF_CUTOFF = 1e-12

_LABEL = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


def _term_factors(x: int, z: int, n: int) -> str:
    out = []
    for j in range(n):
        letter = _LABEL[((x >> j) & 1, (z >> j) & 1)]
        if letter != "I":
            out.append(f"{letter}{j}")
    return " ".join(out)


def _term_sort_key(item):
    (x, z), _ = item
    return bin(x | z).count("1"), x | z, x


class GenerationResult:
    def __init__(self, name, n_qubits, hf_bits, terms, e_hf, e_fci, text):
        self.name = name
        self.n_qubits = n_qubits
        self.hf_bits = hf_bits
        self.terms = terms
        self.e_hf = e_hf
        self.e_fci = e_fci
        self.text = text


def generate(molecule: str | MoleculeSpec, bond: float, mapping: str = "bk") -> GenerationResult:
    if mapping not in ("bk", "jw"):
        raise ValueError(f"unknown mapping {mapping!r}")
    spec = MOLECULES[molecule] if isinstance(molecule, str) else molecule
    atoms = spec.atoms(bond)

    aos = integrals.build_basis(atoms)
    s, t, v = integrals.one_electron_integrals(atoms, aos)
    eri = integrals.electron_repulsion_integrals(aos)
    e_nuc = integrals.nuclear_repulsion(atoms)
    e_scf, c, _ = rhf(s, t + v, eri, spec.n_electrons, e_nuc)

    h_mo, eri_mo = fermion.mo_transform(c, t + v, eri)
    h_eff, eri_act, e_core, n_act_elec = fermion.active_space(
        h_mo, eri_mo, e_nuc, spec.n_electrons, spec.n_frozen, spec.n_active
    )
    n_alpha = n_act_elec // 2
    n_beta = n_act_elec - n_alpha

    e_hf = fermion.hf_determinant_energy(h_eff, eri_act, e_core, n_alpha, n_beta)
    if abs(e_hf - e_scf) > 1e-8:
        raise AssertionError(
            f"active-space HF energy {e_hf} deviates from SCF energy {e_scf}"
        )
    e_fci = fermion.fci_ground_energy(h_eff, eri_act, e_core, n_alpha, n_beta)

    jw = fermion.build_qubit_hamiltonian(h_eff, eri_act, e_core)
    n_q = spec.n_qubits
    occupation = [0] * n_q
    for p in range(n_alpha):
        occupation[2 * p] = 1
    for p in range(n_beta):
        occupation[2 * p + 1] = 1
    if mapping == "bk":
        matrix = bk.bk_matrix(n_q)
        network = bk.cnot_network(matrix)
        qubit_ham = bk.apply_encoding(jw, network)
        hf_bits = bk.encode_bits(matrix, occupation)
    else:
        qubit_ham = jw
        hf_bits = "".join(str(b) for b in occupation)

    terms: dict[tuple[int, int], float] = {}
    for (x, z), coeff in qubit_ham.terms.items():
        if abs(coeff.imag) > IMAG_TOLERANCE:
            raise AssertionError(f"non-Hermitian coefficient {coeff} for ({x:b},{z:b})")
        if abs(coeff.real) >= COEFF_CUTOFF:
            terms[(x, z)] = float(coeff.real)

    # cross-check: the diagonal part evaluated on hf_bits must equal E_HF
    bits_int = sum(1 << j for j, ch in enumerate(hf_bits) if ch == "1")
    diag = sum(
        val * (-1.0) ** (bin(z & bits_int).count("1"))
        for (x, z), val in terms.items()
        if x == 0
    )
    if abs(diag - e_hf) > 1e-8:
        raise AssertionError(f"HF bitstring check failed: {diag} vs {e_hf}")

    lines = [f"nqubits {n_q}", f"hf {hf_bits}"]
    mapping_label = "bravyi-kitaev" if mapping == "bk" else "jordan-wigner"
    lines.append(f"# {spec.name} @ {bond:.4g} A, sto-3g"
                 f" ({n_act_elec}e, {n_q} spin orbitals), {mapping_label}")
    lines.append(f"# ref_hf {e_hf!r}")
    lines.append(f"# ref_fci {e_fci!r}")
    for (x, z), val in sorted(terms.items(), key=_term_sort_key):
        factors = _term_factors(x, z, n_q)
        lines.append(f"term {val!r} {factors}".rstrip())
    text = "\n".join(lines) + "\n"

    return GenerationResult(
        name=f"{spec.name}_{bond}",
        n_qubits=n_q,
        hf_bits=hf_bits,
        terms=terms,
        e_hf=e_hf,
        e_fci=e_fci,
        text=text,
    )
