"""Graph-state ansatz VQE pipeline."""

__version__ = "0.1.0"

from .pauli import (
    CommutationKind,
    PauliString,
    QubitHamiltonian,
    classify_commutation,
    load_hamiltonian,
    multiply,
    one_norm,
    parse_hamiltonian,
)

__all__ = [
    "CommutationKind",
    "PauliString",
    "QubitHamiltonian",
    "classify_commutation",
    "load_hamiltonian",
    "multiply",
    "one_norm",
    "parse_hamiltonian",
    "__version__",
]
