"""Bit-packed Pauli strings, their algebra, and Hamiltonian file parsing.

A Pauli string on n qubits is stored as two n-bit integers (x, z) plus a
sign bit.  Qubit j lives at bit position j of both masks:

    (x_j, z_j) = (0,0) -> I   (1,0) -> X   (0,1) -> Z   (1,1) -> Y

Qubit 0 is the leftmost character in printed labels and the least
significant bit of statevector indices.  Only +/-1 signs are stored;
products that pick up factors of +/-i report them through the explicit
phase channel of :func:`multiply`.

Everything here is immutable after construction (operations hand back
new objects), so values are safe to share across worker threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

_PAULI_FROM_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_FROM_PAULI = {v: k for k, v in _PAULI_FROM_BITS.items()}

# |coefficient| below which a merged term is dropped entirely.
COEFF_CUTOFF = 1e-12
# Imaginary part above which a coefficient is rejected as non-Hermitian.
IMAG_TOLERANCE = 1e-10


class CommutationKind(Enum):
    """How two Pauli strings commute: qubit-wise, generally, or not at all."""

    QWC = "qwc"
    GC = "gc"
    NON_COMMUTING = "non_commuting"


class PauliString:
    """Signed n-qubit Pauli operator in symplectic (x, z) encoding."""

    __slots__ = ("n", "x", "z", "sign")

    def __init__(self, n: int, x: int = 0, z: int = 0, sign: int = 0):
        if n < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << n) - 1
        if x & ~mask or z & ~mask:
            raise ValueError("x/z bits outside qubit range")
        self.n = n
        self.x = x
        self.z = z
        self.sign = sign & 1

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_label(cls, label: str, sign: int = 0) -> "PauliString":
        """Build from a character string like ``"XIZY"`` (qubit 0 leftmost)."""
        x = z = 0
        for j, ch in enumerate(label):
            try:
                xb, zb = _BITS_FROM_PAULI[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli character {ch!r}") from None
            x |= xb << j
            z |= zb << j
        return cls(len(label), x, z, sign)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[str, int]], sign: int = 0) -> "PauliString":
        """Build from ``(letter, qubit)`` pairs, e.g. ``[("X", 0), ("Z", 2)]``."""
        x = z = 0
        for letter, q in factors:
            if not 0 <= q < n:
                raise ValueError(f"qubit index {q} out of range for n={n}")
            if (x >> q) & 1 or (z >> q) & 1:
                raise ValueError(f"duplicate factor on qubit {q}")
            xb, zb = _BITS_FROM_PAULI[letter]
            x |= xb << q
            z |= zb << q
        return cls(n, x, z, sign)

    def label(self) -> str:
        """Character form, qubit 0 leftmost; sign not included."""
        return "".join(
            _PAULI_FROM_BITS[((self.x >> j) & 1, (self.z >> j) & 1)] for j in range(self.n)
        )

    def factor(self, j: int) -> str:
        return _PAULI_FROM_BITS[((self.x >> j) & 1, (self.z >> j) & 1)]

    def weight(self) -> int:
        """Number of non-identity single-qubit factors."""
        return (self.x | self.z).bit_count()

    def z_weight(self) -> int:
        return self.z.bit_count()

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_diagonal(self) -> bool:
        """True when every factor lies in {I, Z}."""
        return self.x == 0

    def with_sign(self, sign: int) -> "PauliString":
        return PauliString(self.n, self.x, self.z, sign)

    def key(self) -> tuple[int, int, int]:
        """Hashable (n, x, z) triple ignoring the sign bit."""
        return (self.n, self.x, self.z)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (self.n, self.x, self.z, self.sign) == (other.n, other.x, other.z, other.sign)

    def __hash__(self) -> int:
        return hash((self.n, self.x, self.z, self.sign))

    def __repr__(self) -> str:
        prefix = "-" if self.sign else "+"
        return f"{prefix}{self.label()}"


def multiply(a: PauliString, b: PauliString) -> tuple[complex, PauliString]:
    """Product a*b as ``(phase, c)`` with phase in {1, i, -1, -i}.

    c carries no sign bit; the signs of both inputs are folded into the
    returned scalar so that a*b == phase * c exactly.
    """
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    x = a.x ^ b.x
    z = a.z ^ b.z
    # i-power bookkeeping: write each factor as i^(x.z) X^x Z^z and commute
    # the Z block of `a` past the X block of `b`.
    g = (
        (a.x & a.z).bit_count()
        + (b.x & b.z).bit_count()
        + 2 * (a.z & b.x).bit_count()
        - (x & z).bit_count()
        + 2 * (a.sign + b.sign)
    ) % 4
    phase = (1j) ** g
    return complex(phase), PauliString(a.n, x, z, 0)


def anticommuting_positions(a: PauliString, b: PauliString) -> int:
    """Count qubits where the single-qubit factors anticommute."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return ((a.x & b.z) ^ (a.z & b.x)).bit_count()


def classify_commutation(a: PauliString, b: PauliString) -> CommutationKind:
    """QWC, GC, or non-commuting per the even-anticommuting-count rule."""
    k = anticommuting_positions(a, b)
    if k == 0:
        return CommutationKind.QWC
    if k % 2 == 0:
        return CommutationKind.GC
    return CommutationKind.NON_COMMUTING


def commutes(a: PauliString, b: PauliString) -> bool:
    return anticommuting_positions(a, b) % 2 == 0


def one_norm(terms: Sequence[tuple[float, PauliString]]) -> float:
    """Sum of |coefficient| over the given terms (identity terms excluded)."""
    return float(sum(abs(c) for c, p in terms if not p.is_identity))


@dataclass(frozen=True)
class QubitHamiltonian:
    """Weighted Pauli-string sum with an explicit identity offset.

    terms holds only non-identity strings with real coefficients; the
    identity contribution lives in ``offset``.  ``hf`` is the occupation
    bitstring of the reference state, position j = qubit j.
    """

    n: int
    terms: tuple[tuple[float, PauliString], ...]
    offset: float = 0.0
    hf: str = ""
    name: str = ""

    def __post_init__(self):
        if self.hf and len(self.hf) != self.n:
            raise ValueError("hf bitstring length must equal qubit count")

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def one_norm(self) -> float:
        return one_norm(self.terms)

    def serialize(self) -> str:
        """Canonical `.ham` text (parse -> serialize -> parse is identity)."""
        lines = [f"nqubits {self.n}", f"hf {self.hf or '0' * self.n}"]
        if self.offset != 0.0:
            lines.append(f"term {self.offset!r}")
        for c, p in self.terms:
            factors = " ".join(
                f"{p.factor(j)}{j}" for j in range(self.n) if p.factor(j) != "I"
            )
            lines.append(f"term {c!r} {factors}".rstrip())
        return "\n".join(lines) + "\n"


class HamParseError(ValueError):
    """Raised on malformed `.ham` input; carries a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_FACTOR_RE = re.compile(r"^([XYZ])(\d+)$")


def _parse_coefficient(token: str, lineno: int) -> float:
    try:
        value = complex(token)
    except ValueError:
        raise HamParseError(lineno, f"bad coefficient {token!r}") from None
    if abs(value.imag) > IMAG_TOLERANCE:
        raise HamParseError(lineno, f"non-negligible imaginary coefficient {token!r}")
    c = value.real
    if c != c or c in (float("inf"), float("-inf")):
        raise HamParseError(lineno, f"non-finite coefficient {token!r}")
    return c


def parse_hamiltonian(text: str, name: str = "") -> QubitHamiltonian:
    """Parse a `.ham` document into a validated QubitHamiltonian.

    Duplicate Pauli strings merge by coefficient addition (first
    occurrence keeps its position); merged terms with |c| < 1e-12 are
    dropped; identity terms accumulate into the offset.
    """
    n: int | None = None
    hf: str | None = None
    order: list[tuple[int, int]] = []
    coeffs: dict[tuple[int, int], float] = {}
    offset = 0.0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "nqubits":
            if n is not None:
                raise HamParseError(lineno, "duplicate nqubits header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise HamParseError(lineno, "expected 'nqubits INT'")
            n = int(parts[1])
        elif kind == "hf":
            if n is None:
                raise HamParseError(lineno, "hf before nqubits")
            if hf is not None:
                raise HamParseError(lineno, "duplicate hf header")
            if len(parts) != 2 or set(parts[1]) - {"0", "1"}:
                raise HamParseError(lineno, "expected 'hf BITSTRING'")
            if len(parts[1]) != n:
                raise HamParseError(lineno, f"hf length {len(parts[1])} != nqubits {n}")
            hf = parts[1]
        elif kind == "term":
            if n is None or hf is None:
                raise HamParseError(lineno, "term before header")
            if len(parts) < 2:
                raise HamParseError(lineno, "term needs a coefficient")
            c = _parse_coefficient(parts[1], lineno)
            factors = []
            for tok in parts[2:]:
                m = _FACTOR_RE.match(tok)
                if not m:
                    raise HamParseError(lineno, f"bad factor {tok!r}")
                q = int(m.group(2))
                if q >= n:
                    raise HamParseError(lineno, f"qubit index {q} >= nqubits {n}")
                factors.append((m.group(1), q))
            try:
                p = PauliString.from_factors(n, factors)
            except ValueError as exc:
                raise HamParseError(lineno, str(exc)) from None
            if p.is_identity:
                offset += c
            else:
                key = (p.x, p.z)
                if key in coeffs:
                    coeffs[key] += c
                else:
                    coeffs[key] = c
                    order.append(key)
        else:
            raise HamParseError(lineno, f"unknown directive {kind!r}")

    if n is None or hf is None:
        raise HamParseError(1, "missing nqubits/hf header")
    terms = tuple(
        (coeffs[key], PauliString(n, key[0], key[1]))
        for key in order
        if abs(coeffs[key]) >= COEFF_CUTOFF
    )
    return QubitHamiltonian(n=n, terms=terms, offset=offset, hf=hf, name=name)


def load_hamiltonian(path) -> QubitHamiltonian:
    from pathlib import Path

    p = Path(path)
    return parse_hamiltonian(p.read_text(), name=p.stem)
