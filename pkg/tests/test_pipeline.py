"""Cross-module invariants exercised over every shipped fixture."""

import numpy as np
import pytest

from hgsa import gf2
from hgsa.dense import basis_state, circuit_unitary, pauli_matrix
from hgsa.graphsynth import verify_diagonalization
from hgsa.grouping import verify_partition
from hgsa.pauli import one_norm
from hgsa.stabilizer import (
    closure_contains_minus_identity,
    independent_generators,
    spans_member,
)
from hgsa.vqe import energy, hf_energy, init_params


def test_partition_verifies_on_every_fixture(fixture_names, load_fixture):
    for name in fixture_names:
        h = load_fixture(name)
        from hgsa.grouping import partition

        report = verify_partition(partition(h), h)
        assert report.passed, (name, report.to_json_obj())


def test_group_sizes_and_generator_counts(fixture_names, load_fixture, plan_for):
    for name in fixture_names:
        h = load_fixture(name)
        plan = plan_for(name)
        for group in plan.grouped.groups:
            assert len(group) <= 2**h.n
            t = independent_generators(group)
            assert t.k <= h.n
            assert gf2.rank(t.xz_matrix()) == t.k
            for p in group.paulis:
                assert spans_member(t, p)


def test_norm_ordering_and_conservation(fixture_names, load_fixture, plan_for):
    for name in fixture_names:
        h = load_fixture(name)
        groups = plan_for(name).grouped.groups
        norms = [g.norm1 for g in groups]
        assert norms == sorted(norms, reverse=True)
        assert sum(norms) == pytest.approx(one_norm(h.terms))


def test_every_uz_diagonalizes_its_group(fixture_names, load_fixture, plan_for):
    for name in fixture_names:
        plan = plan_for(name)
        for block, group in zip(plan.blocks, plan.grouped.groups):
            assert verify_diagonalization(block.uz, group), (name, block.group_id)


def test_uz_two_qubit_count_equals_edges(fixture_names, plan_for):
    for name in fixture_names:
        for block in plan_for(name).blocks:
            assert block.uz.two_qubit_count == len(block.graph_form.edges())


def test_identity_init_energy_equals_hf(fixture_names, load_fixture, plan_for):
    for name in fixture_names:
        h = load_fixture(name)
        plan = plan_for(name)
        theta = init_params(plan, seed=0)
        assert energy(plan, theta, h) == pytest.approx(hf_energy(h), abs=1e-6), name


def test_sign_fixed_tableau_closure_has_no_minus_identity(fixture_names, plan_for):
    for name in fixture_names:
        plan = plan_for(name)
        for block in plan.blocks:
            if block.tableau.k <= 10:
                assert not closure_contains_minus_identity(block.tableau)


def test_sign_fixed_projector_fixes_reference_image_on_4q_fixtures(
    fixture_names, load_fixture, plan_for
):
    for name in fixture_names:
        h = load_fixture(name)
        if h.n > 4:
            continue
        plan = plan_for(name)
        dim = 2**h.n
        for block in plan.blocks:
            u = circuit_unitary(block.uz)
            target = u @ basis_state(h.n, h.hf)
            proj = np.eye(dim, dtype=complex)
            for p in block.tableau.rows:
                proj = proj @ (np.eye(dim) + pauli_matrix(p)) / 2.0
            assert np.linalg.matrix_rank(proj) == 1, (name, block.group_id)
            assert np.allclose(proj @ target, target), (name, block.group_id)


def test_fixture_one_norm_matches_text_level_recomputation(fixture_names, load_fixture):
    from hgsa.fixtures import fixture_path

    for name in fixture_names:
        h = load_fixture(name)
        total = 0.0
        for line in fixture_path(name).read_text().splitlines():
            parts = line.split()
            if parts and parts[0] == "term" and len(parts) > 2:
                total += abs(float(parts[1]))
        assert one_norm(h.terms) == pytest.approx(total, abs=1e-12)


def test_h2_fixture_shape(load_fixture):
    h = load_fixture("h2_0.74.ham")
    assert h.n == 4
    assert h.num_terms == 14
    assert len(h.hf) == 4
