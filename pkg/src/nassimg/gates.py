"""Gate and circuit value types.

The gate algebra is the small set the image transforms need: arbitrary
single-qubit unitaries, single-control unitaries firing on either control
polarity, pattern-controlled multi-X gates, and qubit swaps.  Multi-X and
swap gates map computational basis states to computational basis states,
which is what makes every synthesized transform an exact pixel permutation.

Control convention for the multi-controlled X: the target bit flips when the
control bits MATCH the stored pattern, and the gate is the identity on every
other basis state.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

UNITARY_TOL = 1e-12

IDENTITY2 = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)


def is_unitary(matrix: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    """True when U U+ = I elementwise within ``tol``."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        return False
    return bool(np.max(np.abs(m @ m.conj().T - IDENTITY2)) <= tol)


def _as_unitary(matrix) -> np.ndarray:
    m = np.array(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not is_unitary(m):
        raise ValueError("matrix is not unitary within 1e-12")
    m.setflags(write=False)
    return m


def is_permutation_matrix(matrix: np.ndarray) -> bool:
    """True for 2x2 matrices that are exactly I or X (basis-state relocators)."""
    m = np.asarray(matrix)
    return bool(np.array_equal(m, IDENTITY2) or np.array_equal(m, PAULI_X))


@dataclass(frozen=True)
class ControlPattern:
    """Full-width control pattern of a pattern-controlled X gate.

    ``pattern`` lists the required bits of the n-1 non-target qubits in
    ascending position order.  ``width`` 1 means zero controls: an
    unconditional X on the target.
    """

    width: int
    target: int
    pattern: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pattern", tuple(int(b) for b in self.pattern))
        if self.width < 1:
            raise ValueError("width must be >= 1")
        if not 1 <= self.target <= self.width:
            raise ValueError(f"target {self.target} out of range 1..{self.width}")
        if len(self.pattern) != self.width - 1:
            raise ValueError(
                f"pattern length {len(self.pattern)} != width-1 = {self.width - 1}"
            )
        if any(b not in (0, 1) for b in self.pattern):
            raise ValueError("pattern bits must be 0 or 1")

    def controls(self) -> tuple[tuple[int, int], ...]:
        """(position, required bit) pairs in ascending position order."""
        positions = [p for p in range(1, self.width + 1) if p != self.target]
        return tuple(zip(positions, self.pattern))

    def to_gate(self) -> "MultiControlledX":
        return MultiControlledX(self.target, self.controls())


@dataclass(frozen=True)
class SingleGate:
    """Arbitrary single-qubit unitary on one target qubit."""

    target: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _as_unitary(self.matrix))

    def qubits(self) -> tuple[int, ...]:
        return (self.target,)


@dataclass(frozen=True)
class ControlledGate:
    """Single-qubit unitary applied where one control bit equals ``polarity``."""

    control: int
    polarity: int
    target: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _as_unitary(self.matrix))
        if self.polarity not in (0, 1):
            raise ValueError(f"polarity must be 0 or 1, got {self.polarity}")
        if self.control == self.target:
            raise ValueError("control and target must differ")

    def qubits(self) -> tuple[int, ...]:
        return (self.control, self.target)


@dataclass(frozen=True)
class MultiControlledX:
    """X on ``target`` when every (position, bit) control matches.

    Controls may cover any subset of the other qubits, so gates confined to
    one axis block embed directly into a wider circuit.  An empty control
    set is an unconditional X.
    """

    target: int
    controls: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        ctrls = tuple((int(p), int(b)) for p, b in self.controls)
        object.__setattr__(self, "controls", ctrls)
        seen = {self.target}
        for pos, bit in ctrls:
            if bit not in (0, 1):
                raise ValueError(f"control bit must be 0 or 1, got {bit}")
            if pos in seen:
                raise ValueError(f"duplicate or target-overlapping control at {pos}")
            seen.add(pos)
        if ctrls != tuple(sorted(ctrls)):
            raise ValueError("controls must be in ascending position order")

    def qubits(self) -> tuple[int, ...]:
        return (self.target,) + tuple(p for p, _ in self.controls)


@dataclass(frozen=True)
class SwapGate:
    """Exchange the bits at two qubit positions."""

    qubit_a: int
    qubit_b: int

    def __post_init__(self) -> None:
        if self.qubit_a == self.qubit_b:
            raise ValueError("swap qubits must differ")

    def qubits(self) -> tuple[int, ...]:
        return (self.qubit_a, self.qubit_b)


Gate = SingleGate | ControlledGate | MultiControlledX | SwapGate


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over ``width`` qubits; executed left to right."""

    width: int
    gates: tuple[Gate, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise ValueError("circuit width must be >= 1")
        for gate in self.gates:
            for q in gate.qubits():
                if not 1 <= q <= self.width:
                    raise ValueError(
                        f"gate {gate!r} references qubit {q} outside 1..{self.width}"
                    )

    def __len__(self) -> int:
        return len(self.gates)


# --- JSON serialization (circuit fixtures for the CLI verifier) -------------


def _matrix_to_lists(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def _matrix_from_lists(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def gate_to_dict(gate: Gate) -> dict:
    if isinstance(gate, SingleGate):
        return {"kind": "single", "target": gate.target, "matrix": _matrix_to_lists(gate.matrix)}
    if isinstance(gate, ControlledGate):
        return {
            "kind": "controlled",
            "control": gate.control,
            "polarity": gate.polarity,
            "target": gate.target,
            "matrix": _matrix_to_lists(gate.matrix),
        }
    if isinstance(gate, MultiControlledX):
        return {
            "kind": "mcx",
            "target": gate.target,
            "controls": [[p, b] for p, b in gate.controls],
        }
    if isinstance(gate, SwapGate):
        return {"kind": "swap", "a": gate.qubit_a, "b": gate.qubit_b}
    raise TypeError(f"unknown gate type {type(gate).__name__}")


def gate_from_dict(data: dict) -> Gate:
    kind = data.get("kind")
    if kind == "single":
        return SingleGate(data["target"], _matrix_from_lists(data["matrix"]))
    if kind == "controlled":
        return ControlledGate(
            data["control"], data["polarity"], data["target"], _matrix_from_lists(data["matrix"])
        )
    if kind == "mcx":
        return MultiControlledX(data["target"], tuple((p, b) for p, b in data["controls"]))
    if kind == "swap":
        return SwapGate(data["a"], data["b"])
    raise ValueError(f"unknown gate kind {kind!r}")


def circuit_to_dict(circuit: Circuit) -> dict:
    return {
        "width": circuit.width,
        "label": circuit.label,
        "gates": [gate_to_dict(g) for g in circuit.gates],
    }


def circuit_from_dict(data: dict) -> Circuit:
    return Circuit(
        width=int(data["width"]),
        gates=tuple(gate_from_dict(g) for g in data["gates"]),
        label=str(data.get("label", "")),
    )
