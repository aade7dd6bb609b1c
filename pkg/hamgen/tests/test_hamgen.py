"""Fixture-generator checks: chemistry sanity, determinism, and agreement
with the consumer package through its CLI and file format only."""

import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from hamgen import bk, fermion, integrals
from hamgen.cli import SHIPPED_GEOMETRIES, fixture_filename, main
from hamgen.generate import generate
from hamgen.molecules import MOLECULES
from hamgen.scf import rhf


def _run_consumer_cli(*args) -> subprocess.CompletedProcess:
    return subprocess.run(
        ["hgsa", *args], capture_output=True, text=True, timeout=600
    )


def _ref_values(text: str) -> dict:
    refs = {}
    for line in text.splitlines():
        if line.startswith("# ref_"):
            _, key, value = line.split()
            refs[key[4:]] = float(value)
    return refs


@pytest.fixture(scope="module")
def h2_result():
    return generate("h2", 0.74)


class TestChemistry:
    def test_h2_hartree_fock_energy(self, h2_result):
        # STO-3G H2 near equilibrium; reference values from standard tables
        assert h2_result.e_hf == pytest.approx(-1.11676, abs=2e-4)

    def test_h2_fci_energy(self):
        res = generate("h2", 0.7414)
        assert res.e_fci == pytest.approx(-1.13727, abs=2e-5)

    def test_h2_has_fourteen_terms(self, h2_result):
        non_identity = sum(1 for key in h2_result.terms if key != (0, 0))
        assert non_identity == 14

    def test_correlation_is_negative(self, h2_result):
        assert h2_result.e_fci < h2_result.e_hf

    def test_n2_scf_matches_literature(self):
        spec = MOLECULES["n2"]
        atoms = spec.atoms(1.0977)
        aos = integrals.build_basis(atoms)
        s, t, v = integrals.one_electron_integrals(atoms, aos)
        eri = integrals.electron_repulsion_integrals(aos)
        e, _, _ = rhf(s, t + v, eri, 14, integrals.nuclear_repulsion(atoms))
        assert e == pytest.approx(-107.496, abs=2e-3)


class TestEncoding:
    def test_bk_matrix_four_modes(self):
        m = bk.bk_matrix(4)
        expected = np.array(
            [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]], dtype=np.uint8
        )
        assert np.array_equal(m, expected)

    def test_bk_matrix_invertible_for_all_sizes(self):
        for n in range(1, 21):
            m = bk.bk_matrix(n).astype(float)
            assert round(abs(np.linalg.det(m))) % 2 == 1

    def test_cnot_network_realizes_matrix(self):
        rng = np.random.default_rng(5)
        for n in (2, 3, 6, 12):
            m = bk.bk_matrix(n)
            net = bk.cnot_network(m)
            for _ in range(20):
                x = rng.integers(0, 2, n).astype(np.uint8)
                y = x.copy()
                for control, target in net:
                    y[target] ^= y[control]
                assert np.array_equal(y, m @ x % 2)

    def test_jw_operators_anticommute(self):
        a0 = fermion.jw_lower(0)
        a0d = fermion.jw_raise(0)
        acc = (a0 * a0d).add(a0d * a0)  # {a, a+} = 1
        assert acc.terms == {(0, 0): pytest.approx(1.0 + 0j)}

    def test_hf_bits_diagonal_energy(self, h2_result):
        # <hf|H|hf> evaluated on diagonal terms must equal the SCF energy
        bits = sum(1 << j for j, ch in enumerate(h2_result.hf_bits) if ch == "1")
        diag = sum(
            val * (-1.0) ** bin(z & bits).count("1")
            for (x, z), val in h2_result.terms.items()
            if x == 0
        )
        assert diag == pytest.approx(h2_result.e_hf, abs=1e-10)


class TestEmission:
    def test_deterministic(self):
        assert generate("h2", 0.74).text == generate("h2", 0.74).text

    def test_coefficients_real_and_bounded(self, h2_result):
        for val in h2_result.terms.values():
            assert isinstance(val, float) and np.isfinite(val)

    def test_grammar_shape(self, h2_result):
        lines = h2_result.text.splitlines()
        assert lines[0].startswith("nqubits ")
        assert lines[1].startswith("hf ")
        kinds = {line.split()[0] for line in lines if line.strip()}
        assert kinds <= {"nqubits", "hf", "term", "#"}

    def test_shipped_set_covers_target_systems(self):
        assert set(SHIPPED_GEOMETRIES) == {"h2", "lih", "h4", "h2o", "n2"}
        assert 0.74 in SHIPPED_GEOMETRIES["h2"]
        assert 3.0 in SHIPPED_GEOMETRIES["n2"]

    def test_jordan_wigner_flag(self, h2_result):
        jw = generate("h2", 0.74, mapping="jw")
        # occupation-basis reference, same spectrum as the default encoding
        assert jw.hf_bits == "1100"
        assert jw.e_fci == pytest.approx(h2_result.e_fci, abs=1e-12)
        assert sum(1 for key in jw.terms if key != (0, 0)) == 14


class TestConsumerAgreement:
    """Dual-oracle checks through the consumer CLI (no library imports)."""

    def test_regenerated_h2_fci_matches_consumer_oracle(self, tmp_path):
        rc = main(["--molecule", "h2", "--bond", "0.74", "--out", str(tmp_path)])
        assert rc == 0
        path = tmp_path / fixture_filename("h2", 0.74)
        refs = _ref_values(path.read_text())
        proc = _run_consumer_cli("fci", "--input", str(path))
        assert proc.returncode == 0, proc.stderr
        consumer_fci = float(proc.stdout.strip())
        assert consumer_fci == pytest.approx(refs["fci"], abs=1e-8)

    def test_regenerated_h2_parses_and_partitions(self, tmp_path):
        main(["--molecule", "h2", "--bond", "0.74", "--out", str(tmp_path)])
        path = tmp_path / fixture_filename("h2", 0.74)
        proc = _run_consumer_cli("partition", "--input", str(path),
                                 "--out", str(tmp_path / "out"))
        assert proc.returncode == 0, proc.stderr

    @pytest.mark.parametrize("molecule,bond", [("h2", 0.74), ("lih", 1.595)])
    def test_regeneration_matches_checked_in_fixture_bytes(self, tmp_path, molecule, bond):
        main(["--molecule", molecule, "--bond", str(bond), "--out", str(tmp_path)])
        regenerated = (tmp_path / fixture_filename(molecule, bond)).read_text()
        name = fixture_filename(molecule, bond)
        proc = subprocess.run(
            [sys.executable, "-c",
             "from hgsa.fixtures import fixture_path; "
             f"print(fixture_path({name!r}))"],
            capture_output=True, text=True,
        )
        checked_in = Path(proc.stdout.strip()).read_text()
        assert regenerated == checked_in
