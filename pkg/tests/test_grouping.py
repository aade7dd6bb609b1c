"""Commuting-group partitioning and its verification report."""

import pytest

from hgsa.grouping import CommutingGroup, GroupedHamiltonian, partition, verify_partition
from hgsa.pauli import PauliString, classify_commutation, CommutationKind, parse_hamiltonian

FOUR_TERM = (
    "nqubits 2\nhf 00\n"
    "term 0.5 Z0\nterm 0.3 Z0 Z1\nterm 0.2 X0 X1\nterm 0.1 Y0 Y1\n"
)


def brute_force_commuting(group):
    ps = group.paulis
    return all(
        classify_commutation(ps[i], ps[j]) is not CommutationKind.NON_COMMUTING
        for i in range(len(ps))
        for j in range(i + 1, len(ps))
    )


class TestPartition:
    def test_four_term_example(self):
        gh = partition(parse_hamiltonian(FOUR_TERM))
        assert gh.num_groups == 2
        diag, rest = gh.groups
        assert diag.is_diagonal and diag.norm1 == pytest.approx(0.8)
        assert {p.label() for p in diag.paulis} == {"ZI", "ZZ"}
        assert rest.norm1 == pytest.approx(0.3)
        assert {p.label() for p in rest.paulis} == {"XX", "YY"}
        assert brute_force_commuting(rest)

    def test_single_term(self):
        gh = partition(parse_hamiltonian("nqubits 1\nhf 0\nterm 1.0 X0\n"))
        assert gh.num_groups == 1 and not gh.groups[0].is_diagonal

    def test_empty_hamiltonian(self):
        gh = partition(parse_hamiltonian("nqubits 2\nhf 00\n"))
        assert gh.num_groups == 0

    def test_descending_norm_order(self):
        gh = partition(parse_hamiltonian(FOUR_TERM))
        norms = [g.norm1 for g in gh.groups]
        assert norms == sorted(norms, reverse=True)

    def test_ascending_flag(self):
        gh = partition(parse_hamiltonian(FOUR_TERM), order="asc")
        norms = [g.norm1 for g in gh.groups]
        assert norms == sorted(norms)

    def test_deterministic(self):
        h = parse_hamiltonian(FOUR_TERM)
        a = partition(h)
        b = partition(h)
        assert [
            [(c, p.label()) for c, p in g.members] for g in a.groups
        ] == [[(c, p.label()) for c, p in g.members] for g in b.groups]

    def test_offset_carried(self):
        gh = partition(parse_hamiltonian("nqubits 1\nhf 0\nterm 2.5\nterm 1.0 X0\n"))
        assert gh.offset == pytest.approx(2.5)

    def test_norm_conservation(self):
        h = parse_hamiltonian(FOUR_TERM)
        gh = partition(h)
        assert sum(g.norm1 for g in gh.groups) == pytest.approx(h.one_norm())


class TestVerifyPartition:
    def test_valid_partition_passes(self):
        h = parse_hamiltonian(FOUR_TERM)
        report = verify_partition(partition(h), h)
        assert report.passed, report.to_json_obj()

    def test_tampered_grouping_fails(self):
        h = parse_hamiltonian(FOUR_TERM)
        gh = partition(h)
        diag, rest = gh.groups
        # move one term across groups: X0X1 next to the diagonal members
        bad_members = diag.members + (rest.members[0],)
        tampered = GroupedHamiltonian(
            n=gh.n,
            groups=(
                CommutingGroup.from_members(bad_members, is_diagonal=False),
                CommutingGroup.from_members(rest.members[1:]),
            ),
            offset=gh.offset,
        )
        report = verify_partition(tampered, h)
        assert not report.passed
        failed = {c.name for c in report.checks if not c.passed}
        assert "within_group_commutativity" in failed

    def test_empty_hamiltonian_vacuous_pass(self):
        h = parse_hamiltonian("nqubits 2\nhf 00\n")
        assert verify_partition(partition(h), h).passed
