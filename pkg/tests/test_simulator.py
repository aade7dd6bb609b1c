"""Statevector gates, expectations, and finite-difference gradients."""

import numpy as np
import pytest

from hgsa.circuit import Circuit, Gate
from hgsa.dense import circuit_unitary, hamiltonian_matrix
from hgsa.pauli import PauliString, parse_hamiltonian
from hgsa.simulator import (
    StateVector,
    expectation,
    gradient,
    init_basis,
    pauli_action,
    pauli_expectation,
)


class TestInitBasis:
    def test_single_qubit_zero(self):
        s = init_basis(1, "0")
        assert np.allclose(s.data, [1, 0])

    def test_endianness_pin(self):
        # "10" means qubit 0 occupied -> index 1
        s = init_basis(2, "10")
        assert np.allclose(s.data, [0, 1, 0, 0])

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            init_basis(2, "101")


class TestApply:
    def test_hadamard_on_zero(self):
        s = init_basis(1, "0").apply(Gate("h", (0,)))
        assert np.allclose(s.data, np.array([1, 1]) / np.sqrt(2))

    def test_rz_full_turn_is_global_minus(self):
        rng = np.random.default_rng(1)
        data = rng.normal(size=4) + 1j * rng.normal(size=4)
        data /= np.linalg.norm(data)
        s = StateVector(2, data.copy())
        s.apply(Gate("rz", (1,), 2 * np.pi))
        assert np.allclose(s.data, -data)
        assert s.norm() == pytest.approx(1.0, abs=1e-12)

    def test_random_circuit_against_dense(self):
        rng = np.random.default_rng(9)
        for _ in range(40):
            c = Circuit(3)
            for _ in range(int(rng.integers(1, 15))):
                r = rng.random()
                if r < 0.25:
                    a, b = rng.choice(3, size=2, replace=False)
                    c.append(str(rng.choice(["cz", "cx"])), int(a), int(b))
                elif r < 0.6:
                    c.append(str(rng.choice(["rz", "ry"])), int(rng.integers(0, 3)),
                             angle=float(rng.uniform(0, 2 * np.pi)))
                else:
                    c.append(str(rng.choice(["h", "s", "sdg", "x", "y", "z"])),
                             int(rng.integers(0, 3)))
            data = rng.normal(size=8) + 1j * rng.normal(size=8)
            data /= np.linalg.norm(data)
            s = StateVector(3, data.copy()).apply_circuit(c)
            assert np.allclose(s.data, circuit_unitary(c) @ data)
            assert s.norm() == pytest.approx(1.0, abs=1e-10)

    def test_involutions(self):
        rng = np.random.default_rng(2)
        data = rng.normal(size=8) + 1j * rng.normal(size=8)
        data /= np.linalg.norm(data)
        s = StateVector(3, data.copy())
        s.apply(Gate("h", (1,))).apply(Gate("h", (1,)))
        assert np.allclose(s.data, data, atol=1e-12)
        for _ in range(4):
            s.apply(Gate("s", (0,)))
        assert np.allclose(s.data, data, atol=1e-12)
        s.apply(Gate("cz", (0, 2))).apply(Gate("cz", (0, 2)))
        assert np.allclose(s.data, data, atol=1e-12)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="range"):
            Circuit(2).h(2)


class TestExpectation:
    def test_z_on_zero(self):
        s = init_basis(1, "0")
        assert pauli_expectation(s, PauliString.from_label("Z")) == pytest.approx(1.0)

    def test_z_on_plus(self):
        s = init_basis(1, "0").apply(Gate("h", (0,)))
        assert pauli_expectation(s, PauliString.from_label("Z")) == pytest.approx(0.0, abs=1e-12)

    def test_random_states_against_dense_quadratic_form(self):
        text = (
            "nqubits 3\nhf 000\nterm 0.5\nterm 0.25 Z0\nterm -0.5 X0 Y1\n"
            "term 0.125 Z0 Z1 Z2\nterm 1.5 Y0 Y1 X2\n"
        )
        h = parse_hamiltonian(text)
        hm = hamiltonian_matrix(h)
        rng = np.random.default_rng(21)
        for _ in range(25):
            data = rng.normal(size=8) + 1j * rng.normal(size=8)
            data /= np.linalg.norm(data)
            s = StateVector(3, data)
            assert expectation(s, h) == pytest.approx(np.real(np.vdot(data, hm @ data)))

    def test_linear_in_coefficients(self):
        h1 = parse_hamiltonian("nqubits 2\nhf 00\nterm 0.3 X0 X1\n")
        h2 = parse_hamiltonian("nqubits 2\nhf 00\nterm 0.6 X0 X1\n")
        rng = np.random.default_rng(4)
        data = rng.normal(size=4) + 1j * rng.normal(size=4)
        data /= np.linalg.norm(data)
        s = StateVector(2, data)
        assert 2 * expectation(s, h1) == pytest.approx(expectation(s, h2))

    def test_dimension_mismatch(self):
        h = parse_hamiltonian("nqubits 2\nhf 00\nterm 1.0 Z0\n")
        with pytest.raises(ValueError, match="mismatch"):
            expectation(init_basis(3, "000"), h)


class TestPauliAction:
    def test_matches_dense(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            n = int(rng.integers(1, 5))
            p = PauliString(
                n, int(rng.integers(0, 2**n)), int(rng.integers(0, 2**n)), int(rng.integers(0, 2))
            )
            data = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
            from hgsa.dense import pauli_matrix

            assert np.allclose(pauli_action(p, data), pauli_matrix(p) @ data)


class TestGradient:
    def test_quadratic(self):
        f = lambda t: float(t[0] ** 2)
        g = gradient(f, np.array([1.0]))
        assert g[0] == pytest.approx(2.0, abs=1e-6)

    def test_constant(self):
        f = lambda t: 3.5
        assert np.allclose(gradient(f, np.zeros(4)), 0.0)

    def test_richardson_agreement_on_smooth_function(self):
        rng = np.random.default_rng(12)
        a = rng.normal(size=5)

        def f(t):
            return float(np.sin(t @ a) + 0.1 * np.sum(t**2))

        theta = rng.normal(size=5)
        g = gradient(f, theta)
        # Richardson-extrapolated central differences as the finer oracle
        h1, h2 = 1e-3, 5e-4
        g1 = gradient(f, theta, step=h1)
        g2 = gradient(f, theta, step=h2)
        richardson = (4 * g2 - g1) / 3
        assert np.allclose(g, richardson, atol=1e-5)


class TestReferenceStateEnergy:
    def test_h2_fixture_hf_expectation_matches_generator_reference(self, load_fixture, ref_values):
        h = load_fixture("h2_0.74.ham")
        s = init_basis(h.n, h.hf)
        assert expectation(s, h) == pytest.approx(ref_values("h2_0.74.ham")["hf"], abs=1e-8)
