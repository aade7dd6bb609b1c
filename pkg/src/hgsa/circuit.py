"""Gate-list circuit representation over a fixed gate set."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

SINGLE_QUBIT_KINDS = {"h", "s", "sdg", "x", "y", "z", "rz", "ry"}
TWO_QUBIT_KINDS = {"cz", "cx"}
CLIFFORD_KINDS = {"h", "s", "sdg", "x", "y", "z", "cz", "cx"}
ROTATION_KINDS = {"rz", "ry"}

_INVERSE = {"h": "h", "s": "sdg", "sdg": "s", "x": "x", "y": "y", "z": "z", "cz": "cz", "cx": "cx"}


class Gate(NamedTuple):
    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def inverse(self) -> "Gate":
        if self.kind in ROTATION_KINDS:
            return Gate(self.kind, self.qubits, -self.angle)
        return Gate(_INVERSE[self.kind], self.qubits)


@dataclass
class Circuit:
    """Ordered gate list on n qubits; gates[0] acts first on the state."""

    n: int
    gates: list[Gate] = field(default_factory=list)

    def _check(self, kind: str, qubits: tuple[int, ...], angle: float | None) -> Gate:
        if kind in SINGLE_QUBIT_KINDS:
            if len(qubits) != 1:
                raise ValueError(f"{kind} takes one qubit")
        elif kind in TWO_QUBIT_KINDS:
            if len(qubits) != 2 or qubits[0] == qubits[1]:
                raise ValueError(f"{kind} takes two distinct qubits")
        else:
            raise ValueError(f"unknown gate kind {kind!r}")
        for q in qubits:
            if not 0 <= q < self.n:
                raise ValueError(f"qubit index {q} out of range for n={self.n}")
        if (angle is None) != (kind not in ROTATION_KINDS):
            raise ValueError(f"angle mismatch for {kind}")
        return Gate(kind, qubits, angle)

    def append(self, kind: str, *qubits: int, angle: float | None = None) -> "Circuit":
        self.gates.append(self._check(kind, qubits, angle))
        return self

    def extend(self, gates) -> "Circuit":
        for g in gates:
            self.gates.append(self._check(g.kind, g.qubits, g.angle))
        return self

    def h(self, q: int) -> "Circuit":
        return self.append("h", q)

    def s(self, q: int) -> "Circuit":
        return self.append("s", q)

    def sdg(self, q: int) -> "Circuit":
        return self.append("sdg", q)

    def cz(self, a: int, b: int) -> "Circuit":
        return self.append("cz", a, b)

    def cx(self, c: int, t: int) -> "Circuit":
        return self.append("cx", c, t)

    def rz(self, q: int, angle: float) -> "Circuit":
        return self.append("rz", q, angle=angle)

    def ry(self, q: int, angle: float) -> "Circuit":
        return self.append("ry", q, angle=angle)

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if g.kind in TWO_QUBIT_KINDS)

    @property
    def is_clifford(self) -> bool:
        return all(g.kind in CLIFFORD_KINDS for g in self.gates)

    def inverse(self) -> "Circuit":
        return Circuit(self.n, [g.inverse() for g in reversed(self.gates)])

    def to_json_obj(self) -> list[dict]:
        out = []
        for g in self.gates:
            entry: dict = {"kind": g.kind, "qubits": list(g.qubits)}
            if g.angle is not None:
                entry["angle"] = g.angle
            out.append(entry)
        return out

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __len__(self) -> int:
        return len(self.gates)
