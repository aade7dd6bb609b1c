"""Stabilizer tableaux: generator extraction, completion, and sign fixing.

A tableau is a list of k <= n signed Pauli strings that pairwise commute
and are GF(2)-independent in their [X|Z] part.  Completion extends a
tableau to full rank n; sign fixing flips generator signs so the group
stabilizes the diagonalizer image of the reference state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .grouping import CommutingGroup
from .pauli import PauliString, commutes, multiply


@dataclass(frozen=True)
class StabilizerTableau:
    n: int
    rows: tuple[PauliString, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    def xz_matrix(self) -> np.ndarray:
        """Binary (k, 2n) matrix, [X | Z] layout."""
        m = np.zeros((self.k, 2 * self.n), dtype=np.uint8)
        for i, p in enumerate(self.rows):
            for j in range(self.n):
                m[i, j] = (p.x >> j) & 1
                m[i, self.n + j] = (p.z >> j) & 1
        return m

    def signs(self) -> tuple[int, ...]:
        return tuple(p.sign for p in self.rows)


def _xz_vector(p: PauliString) -> np.ndarray:
    v = np.zeros(2 * p.n, dtype=np.uint8)
    for j in range(p.n):
        v[j] = (p.x >> j) & 1
        v[p.n + j] = (p.z >> j) & 1
    return v


def independent_generators(group: CommutingGroup) -> StabilizerTableau:
    """Greedy maximal independent subset of the group's [X|Z] vectors.

    Members are scanned in group order and kept whenever they increase
    the GF(2) rank, so every member is a combination of the returned
    rows.  Signs are cleared to +.
    """
    if len(group.members) == 0:
        raise ValueError("empty group")
    n = group.members[0][1].n
    kept: list[PauliString] = []
    basis: list[np.ndarray] = []
    r = 0
    for _, p in group.members:
        if p.is_identity:
            continue
        cand = basis + [_xz_vector(p)]
        new_rank = gf2.rank(np.array(cand, dtype=np.uint8))
        if new_rank > r:
            kept.append(p.with_sign(0))
            basis = cand
            r = new_rank
    if len(kept) > n:
        raise AssertionError("independent generator count exceeded qubit count")
    return StabilizerTableau(n=n, rows=tuple(kept))


def complete_generators(t: StabilizerTableau) -> StabilizerTableau:
    """Extend to exactly n rows with diagonal generators.

    Single-qubit Z strings are tried first in ascending qubit order; any
    remaining deficit is filled from the GF(2) null space of the X block
    (general Z-type strings), which always exists for commuting input.
    """
    n = t.n
    rows = list(t.rows)
    basis = [_xz_vector(p) for p in rows]

    def independent_with(vec: np.ndarray) -> bool:
        cand = basis + [vec]
        return gf2.rank(np.array(cand, dtype=np.uint8)) == len(cand)

    for q in range(n):
        if len(rows) == n:
            break
        zq = PauliString(n, 0, 1 << q)
        if all(commutes(zq, r) for r in rows):
            v = _xz_vector(zq)
            if independent_with(v):
                rows.append(zq)
                basis.append(v)

    if len(rows) < n:
        # Null space of the X block gives every diagonal string commuting
        # with all rows; greedy-pick the ones that stay independent.
        xblock = np.array([b[:n] for b in basis], dtype=np.uint8)
        for zvec in gf2.null_space(xblock):
            if len(rows) == n:
                break
            v = np.concatenate([np.zeros(n, dtype=np.uint8), zvec])
            if independent_with(v):
                zbits = int(sum(int(b) << j for j, b in enumerate(zvec)))
                p = PauliString(n, 0, zbits)
                rows.append(p)
                basis.append(v)

    if len(rows) != n:
        raise AssertionError("generator completion failed for commuting input")
    return StabilizerTableau(n=n, rows=tuple(rows))


def diagonal_eigenvalue(p: PauliString, bits: str) -> int:
    """Eigenvalue (+1/-1) of a diagonal Pauli on a computational basis state."""
    if not p.is_diagonal:
        raise ValueError("operator is not diagonal")
    if len(bits) != p.n:
        raise ValueError("bitstring length mismatch")
    b = sum(1 << j for j, ch in enumerate(bits) if ch == "1")
    parity = (p.z & b).bit_count() & 1
    return -1 if (p.sign ^ parity) else 1


def sign_fix(t: StabilizerTableau, uz, hf: str) -> StabilizerTableau:
    """Flip row signs so every generator fixes the diagonalizer image of hf.

    uz must diagonalize every row; each row P gets conjugated to
    P' = Uz^dag P Uz, its eigenvalue on hf evaluated, and the row sign
    flipped when that eigenvalue is -1.
    """
    from .graphsynth import conjugate_pauli

    fixed = []
    for p in t.rows:
        diag = conjugate_pauli(uz, p)
        if not diag.is_diagonal:
            raise ValueError("circuit does not diagonalize tableau row " + repr(p))
        if diagonal_eigenvalue(diag, hf) == -1:
            fixed.append(p.with_sign(p.sign ^ 1))
        else:
            fixed.append(p)
    return StabilizerTableau(n=t.n, rows=tuple(fixed))


def spans_member(t: StabilizerTableau, p: PauliString) -> bool:
    """True when p's [X|Z] vector lies in the tableau row space."""
    if t.k == 0:
        return p.is_identity
    return gf2.solve(t.xz_matrix(), _xz_vector(p)) is not None


def closure_contains_minus_identity(t: StabilizerTableau) -> bool:
    """Enumerate all 2^k products and look for -I (k <= 10 only)."""
    if t.k > 10:
        raise ValueError("closure enumeration limited to k <= 10")
    for mask in range(1, 1 << t.k):
        acc = PauliString.identity(t.n)
        phase = 1.0 + 0j
        for i in range(t.k):
            if (mask >> i) & 1:
                ph, acc = multiply(acc, t.rows[i])
                phase *= ph
        if acc.is_identity and abs(phase + 1) < 1e-12:
            return True
    return False
