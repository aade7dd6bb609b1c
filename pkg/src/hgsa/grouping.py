"""Partition Hamiltonian terms into general-commuting groups.

Diagonal (Z/I-only) terms form one dedicated group.  The remaining terms
are processed in non-increasing |coefficient| order (ties broken by label)
and inserted into the first existing group whose members all commute with
them, creating a new group when none fits.  Groups are finally ordered by
descending 1-norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import dense
from .pauli import (
    CommutationKind,
    PauliString,
    QubitHamiltonian,
    classify_commutation,
    commutes,
    one_norm,
)


@dataclass(frozen=True)
class CommutingGroup:
    members: tuple[tuple[float, PauliString], ...]
    is_diagonal: bool
    norm1: float

    @classmethod
    def from_members(cls, members, is_diagonal: bool = False) -> "CommutingGroup":
        members = tuple(members)
        if not members:
            raise ValueError("a commuting group cannot be empty")
        return cls(members=members, is_diagonal=is_diagonal, norm1=one_norm(members))

    @property
    def paulis(self) -> tuple[PauliString, ...]:
        return tuple(p for _, p in self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class GroupedHamiltonian:
    n: int
    groups: tuple[CommutingGroup, ...]
    offset: float = 0.0

    @property
    def num_groups(self) -> int:
        return len(self.groups)


def _canonical_order(term: tuple[float, PauliString]) -> tuple[float, str]:
    c, p = term
    return (-abs(c), p.label())


def partition(h: QubitHamiltonian, order: str = "desc") -> GroupedHamiltonian:
    """Cluster terms into GC-commuting groups by sorted first-fit insertion.

    order selects the final 1-norm ordering of the groups ("desc" or
    "asc"); ties keep the diagonal group first, then creation order.
    """
    if order not in ("desc", "asc"):
        raise ValueError(f"bad group order {order!r}")
    diagonal = [(c, p) for c, p in h.terms if p.is_diagonal]
    rest = sorted(((c, p) for c, p in h.terms if not p.is_diagonal), key=_canonical_order)

    groups: list[list[tuple[float, PauliString]]] = []
    for c, p in rest:
        for g in groups:
            if all(commutes(p, q) for _, q in g):
                g.append((c, p))
                break
        else:
            groups.append([(c, p)])

    built: list[CommutingGroup] = []
    if diagonal:
        built.append(CommutingGroup.from_members(diagonal, is_diagonal=True))
    built.extend(CommutingGroup.from_members(g) for g in groups)

    # stable sort: ties keep diagonal-first creation order from `built`
    built.sort(key=lambda g: -g.norm1 if order == "desc" else g.norm1)
    return GroupedHamiltonian(n=h.n, groups=tuple(built), offset=h.offset)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PartitionReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    def to_json_obj(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def verify_partition(gh: GroupedHamiltonian, h: QubitHamiltonian) -> PartitionReport:
    """Structured disjoint-cover / commutativity / ordering verification."""
    report = PartitionReport()

    grouped = [key for g in gh.groups for key in ((p.x, p.z) for p in g.paulis)]
    source = [(p.x, p.z) for _, p in h.terms]
    report.add(
        "disjoint_cover",
        len(grouped) == len(set(grouped)) and set(grouped) == set(source),
        f"{len(grouped)} grouped vs {len(source)} source terms",
    )

    ok = True
    for gi, g in enumerate(gh.groups):
        ps = g.paulis
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                if classify_commutation(ps[i], ps[j]) is CommutationKind.NON_COMMUTING:
                    ok = False
                    report.add(
                        "within_group_commutativity",
                        False,
                        f"group {gi}: {ps[i]!r} vs {ps[j]!r}",
                    )
    if ok:
        report.add("within_group_commutativity", True)

    if h.n <= 4:
        dense_ok = all(
            dense.commutator_is_zero(a, b)
            for g in gh.groups
            for i, a in enumerate(g.paulis)
            for b in g.paulis[i + 1 :]
        )
        report.add("within_group_commutativity_dense", dense_ok)

    diag_ok = all(p.is_diagonal for g in gh.groups if g.is_diagonal for p in g.paulis)
    report.add("diagonal_group_is_diagonal", diag_ok)

    norms = [g.norm1 for g in gh.groups]
    report.add("ordering", all(a >= b - 1e-15 for a, b in zip(norms, norms[1:])) or
               all(a <= b + 1e-15 for a, b in zip(norms, norms[1:])),
               f"norms={norms}")

    cover_norm = sum(g.norm1 for g in gh.groups)
    report.add(
        "norm_conservation",
        abs(cover_norm - h.one_norm()) < 1e-9,
        f"{cover_norm} vs {h.one_norm()}",
    )
    return report
