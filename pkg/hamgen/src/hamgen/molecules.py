"""Molecular systems matching the target fixture set.

Each spec fixes the geometry builder, basis occupancy, and active space:
H2 (2e, 4q) and H4 (4e, 8q) use the full STO-3G space; LiH (2e, 6q),
H2O (6e, 10q), and N2 (6e, 12q) freeze the lowest core orbitals and keep
the canonical MOs around the Fermi level.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .integrals import ANG2BOHR


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    n_electrons: int
    n_frozen: int
    n_active: int

    @property
    def n_qubits(self) -> int:
        return 2 * self.n_active

    @property
    def n_active_electrons(self) -> int:
        return self.n_electrons - 2 * self.n_frozen

    def atoms(self, bond: float):
        raise NotImplementedError


class H2(MoleculeSpec):
    def __init__(self):
        super().__init__("h2", n_electrons=2, n_frozen=0, n_active=2)

    def atoms(self, bond: float):
        r = bond * ANG2BOHR
        return [("H", np.zeros(3)), ("H", np.array([0.0, 0.0, r]))]


class LiH(MoleculeSpec):
    def __init__(self):
        super().__init__("lih", n_electrons=4, n_frozen=1, n_active=3)

    def atoms(self, bond: float):
        r = bond * ANG2BOHR
        return [("Li", np.zeros(3)), ("H", np.array([0.0, 0.0, r]))]


class H4(MoleculeSpec):
    """Linear hydrogen chain with uniform spacing."""

    def __init__(self):
        super().__init__("h4", n_electrons=4, n_frozen=0, n_active=4)

    def atoms(self, bond: float):
        r = bond * ANG2BOHR
        return [("H", np.array([0.0, 0.0, i * r])) for i in range(4)]


class H2O(MoleculeSpec):
    """Symmetric bend at 104.5 degrees; bond is the O-H distance."""

    def __init__(self):
        super().__init__("h2o", n_electrons=10, n_frozen=2, n_active=5)

    def atoms(self, bond: float):
        r = bond * ANG2BOHR
        half = np.deg2rad(104.5) / 2.0
        return [
            ("O", np.zeros(3)),
            ("H", np.array([r * np.sin(half), 0.0, r * np.cos(half)])),
            ("H", np.array([-r * np.sin(half), 0.0, r * np.cos(half)])),
        ]


class N2(MoleculeSpec):
    def __init__(self):
        super().__init__("n2", n_electrons=14, n_frozen=4, n_active=6)

    def atoms(self, bond: float):
        r = bond * ANG2BOHR
        return [("N", np.zeros(3)), ("N", np.array([0.0, 0.0, r]))]


MOLECULES: dict[str, MoleculeSpec] = {
    "h2": H2(),
    "lih": LiH(),
    "h4": H4(),
    "h2o": H2O(),
    "n2": N2(),
}
