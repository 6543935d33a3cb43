"""Circuit-free reference permutations and circuit equivalence checking.

``oracle_permutation`` evaluates each transform as plain coordinate
arithmetic on the lattice (strides, div/mod, complements) with no reference
to circuits, gates, or Gray codes, so agreement with
``permutation_of_circuit`` is a genuine two-route check rather than a
tautology.

``permutation_of_circuit`` extracts the basis permutation a circuit
realizes by chasing every basis index through the gate list; a circuit
containing a gate that does not map basis states to basis states is
rejected.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gates import (
    Circuit,
    ControlledGate,
    MultiControlledX,
    PAULI_X,
    SingleGate,
    SwapGate,
    is_permutation_matrix,
)
from .geometry import ImageGeometry
from .simulator import run
from .state import NassState
from .transforms import (
    LocalFlipSpec,
    RotationAngle,
    RotationSpec,
    SymmetricFlipSpec,
    TransformSpec,
    TranslationSpec,
    TwoPointSwapSpec,
    build_circuit,
)

EXHAUSTIVE_LIMIT = 12
SAMPLE_COUNT = 10_000


class NonPermutationCircuitError(ValueError):
    """A circuit output on some basis state was not a basis state."""


@dataclass
class PixelPermutation:
    """A bijection on basis indices; ``table[i]`` is where index i goes."""

    width: int
    table: np.ndarray

    def __post_init__(self) -> None:
        table = np.ascontiguousarray(self.table, dtype=np.int64)
        size = 1 << self.width
        if table.shape != (size,):
            raise ValueError(f"permutation table must have 2^{self.width} entries")
        counts = np.bincount(table, minlength=size)
        if table.min(initial=0) < 0 or table.max(initial=0) >= size or np.any(counts != 1):
            raise ValueError("table is not a bijection on basis indices")
        table.setflags(write=False)
        self.table = table

    @classmethod
    def identity(cls, width: int) -> "PixelPermutation":
        return cls(width, np.arange(1 << width, dtype=np.int64))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.table, np.arange(1 << self.width)))

    def apply_to_array(self, values: np.ndarray) -> np.ndarray:
        """Relocate ``values[i]`` to position ``table[i]``."""
        values = np.asarray(values)
        out = np.empty_like(values)
        out[self.table] = values
        return out

    def compose(self, first: "PixelPermutation") -> "PixelPermutation":
        """Permutation equal to ``first`` then ``self``."""
        if first.width != self.width:
            raise ValueError("widths differ")
        return PixelPermutation(self.width, self.table[first.table])

    def as_list(self) -> list[int]:
        """Plain target-index list, the JSON regression-fixture form."""
        return [int(v) for v in self.table]

    @classmethod
    def from_list(cls, width: int, values) -> "PixelPermutation":
        return cls(width, np.asarray(values, dtype=np.int64))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PixelPermutation):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.table, other.table)


# ---------------------------------------------------------------------------
# transform oracles: coordinate arithmetic only
# ---------------------------------------------------------------------------


def _strides(geometry: ImageGeometry) -> list[int]:
    shape = geometry.shape
    strides = [1] * geometry.k
    for j in range(geometry.k - 2, -1, -1):
        strides[j] = strides[j + 1] * shape[j + 1]
    return strides


def _axis_values(geometry: ImageGeometry, idx: np.ndarray) -> list[np.ndarray]:
    shape = geometry.shape
    strides = _strides(geometry)
    return [(idx // strides[j]) % shape[j] for j in range(geometry.k)]


def _assemble(geometry: ImageGeometry, values) -> np.ndarray:
    strides = _strides(geometry)
    out = 0
    for v, stride in zip(values, strides):
        out = out + v * stride
    return out


def _oracle_destinations(geometry: ImageGeometry, spec: TransformSpec, idx: np.ndarray) -> np.ndarray:
    shape = geometry.shape
    if isinstance(spec, TwoPointSwapSpec):
        s = geometry.index_of(spec.point_s)
        t = geometry.index_of(spec.point_t)
        if s == t:
            raise ValueError("the two swapped points must differ")
        dest = idx.copy()
        dest[idx == s] = t
        dest[idx == t] = s
        return dest

    values = _axis_values(geometry, idx)

    if isinstance(spec, SymmetricFlipSpec):
        j = spec.fixed_axis
        geometry.axis_span(j)  # validates the axis index
        new_values = [
            v if axis == j - 1 else (shape[axis] - 1) - v
            for axis, v in enumerate(values)
        ]
        return _assemble(geometry, new_values)

    if isinstance(spec, LocalFlipSpec):
        x = spec.preserved_axis - 1
        j = spec.control_axis - 1
        mj = geometry.axis_width(spec.control_axis)
        if not 1 <= spec.bit <= mj:
            raise ValueError(f"control bit {spec.bit} out of range 1..{mj}")
        place = 1 << (mj - spec.bit)
        control_bit = (values[j] // place) % 2
        selected = control_bit == spec.polarity
        new_values = []
        for axis, v in enumerate(values):
            if axis == x:
                new_values.append(v)
                continue
            flipped = (shape[axis] - 1) - v
            if axis == j:
                # the control bit itself survives the complement
                flipped = flipped + (2 * spec.polarity - 1) * place
            new_values.append(np.where(selected, flipped, v))
        return _assemble(geometry, new_values)

    if isinstance(spec, RotationSpec):
        x = spec.axis_x - 1
        y = spec.axis_y - 1
        if spec.axis_x == spec.axis_y:
            raise ValueError("rotation plane needs two distinct axes")
        if geometry.axis_width(spec.axis_x) != geometry.axis_width(spec.axis_y):
            raise ValueError("rotation axes must have equal widths")
        top = shape[x] - 1
        vx, vy = values[x], values[y]
        if spec.angle is RotationAngle.QUARTER:
            new_x, new_y = vy, top - vx
        elif spec.angle is RotationAngle.HALF:
            new_x, new_y = top - vx, top - vy
        else:
            new_x, new_y = top - vy, vx
        new_values = list(values)
        new_values[x] = new_x
        new_values[y] = new_y
        return _assemble(geometry, new_values)

    if isinstance(spec, TranslationSpec):
        x = spec.axis - 1
        geometry.axis_span(spec.axis)  # validates the axis index
        new_values = list(values)
        new_values[x] = (values[x] + 1) % shape[x]
        return _assemble(geometry, new_values)

    raise TypeError(f"unknown transform spec {type(spec).__name__}")


def oracle_permutation(geometry: ImageGeometry, spec: TransformSpec) -> PixelPermutation:
    """The transform's pixel map as an explicit permutation table."""
    idx = np.arange(geometry.size, dtype=np.int64)
    return PixelPermutation(geometry.n, _oracle_destinations(geometry, spec, idx))


# ---------------------------------------------------------------------------
# circuit-side permutation extraction
# ---------------------------------------------------------------------------


def _gate_is_structural(gate) -> bool:
    if isinstance(gate, (MultiControlledX, SwapGate)):
        return True
    if isinstance(gate, (SingleGate, ControlledGate)):
        return is_permutation_matrix(gate.matrix)
    return False


def track_basis_indices(circuit: Circuit, indices: np.ndarray) -> np.ndarray:
    """Chase basis indices through a permutation-structured circuit."""
    n = circuit.width
    cur = np.array(indices, dtype=np.int64)
    for gate in circuit.gates:
        if isinstance(gate, SingleGate):
            if np.array_equal(gate.matrix, PAULI_X):
                cur ^= 1 << (n - gate.target)
            # exact identity matrices are no-ops; anything else is rejected
            elif not _gate_is_structural(gate):
                raise NonPermutationCircuitError(
                    "circuit contains a non-permutation single-qubit gate"
                )
        elif isinstance(gate, ControlledGate):
            if not _gate_is_structural(gate):
                raise NonPermutationCircuitError(
                    "circuit contains a non-permutation controlled gate"
                )
            if np.array_equal(gate.matrix, PAULI_X):
                cb = 1 << (n - gate.control)
                fire = ((cur & cb) != 0) == bool(gate.polarity)
                cur = np.where(fire, cur ^ (1 << (n - gate.target)), cur)
        elif isinstance(gate, MultiControlledX):
            cmask = 0
            cval = 0
            for pos, bit in gate.controls:
                b = 1 << (n - pos)
                cmask |= b
                if bit:
                    cval |= b
            fire = (cur & cmask) == cval
            cur = np.where(fire, cur ^ (1 << (n - gate.target)), cur)
        elif isinstance(gate, SwapGate):
            ba = 1 << (n - gate.qubit_a)
            bb = 1 << (n - gate.qubit_b)
            differ = ((cur & ba) != 0) != ((cur & bb) != 0)
            cur = np.where(differ, cur ^ (ba | bb), cur)
        else:
            raise TypeError(f"unknown gate type {type(gate).__name__}")
    return cur


def _permutation_by_simulation(circuit: Circuit, tol: float = 1e-9) -> np.ndarray:
    """Slow route for circuits with non-relocation gates: run every basis state."""
    from .geometry import ImageGeometry as _Geometry

    size = 1 << circuit.width
    geometry = _Geometry((circuit.width,))
    table = np.empty(size, dtype=np.int64)
    for i in range(size):
        amps = np.zeros(size, dtype=np.complex128)
        amps[i] = 1.0
        out = run(circuit, NassState(geometry, amps)).amplitudes
        j = int(np.argmax(np.abs(out)))
        rest = np.abs(np.delete(out, j))
        if abs(out[j] - 1.0) > tol or (rest.size and rest.max() > tol):
            raise NonPermutationCircuitError(
                f"output for basis state {i} is not a basis state"
            )
        table[i] = j
    return table


def permutation_of_circuit(
    circuit: Circuit, exhaustive_limit: int = EXHAUSTIVE_LIMIT
) -> PixelPermutation:
    """Extract the permutation a circuit realizes over all basis states."""
    if circuit.width > exhaustive_limit:
        raise ValueError(
            f"circuit width {circuit.width} exceeds the exhaustive limit "
            f"{exhaustive_limit}; use sampled verification instead"
        )
    if all(_gate_is_structural(g) for g in circuit.gates):
        table = track_basis_indices(circuit, np.arange(1 << circuit.width))
    else:
        table = _permutation_by_simulation(circuit)
    try:
        return PixelPermutation(circuit.width, table)
    except ValueError as exc:
        raise NonPermutationCircuitError(str(exc)) from None


# ---------------------------------------------------------------------------
# circuit-vs-oracle verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    """Outcome of one circuit-vs-oracle comparison."""

    label: str
    width: int
    mode: str  # "exhaustive" or "sampled"
    checked: int
    passed: bool
    first_mismatch: tuple[int, int, int] | None = None  # (index, circuit, oracle)

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"{self.label}: {status} ({self.mode}, {self.checked} basis states)"
        if self.first_mismatch is not None:
            i, got, want = self.first_mismatch
            text += f"; first mismatch at basis index {i}: circuit->{got}, oracle->{want}"
        return text


def verify_transform(
    geometry: ImageGeometry,
    spec: TransformSpec,
    circuit: Circuit | None = None,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    samples: int = SAMPLE_COUNT,
    seed: int = 0,
) -> VerifyReport:
    """Compare a transform circuit against the coordinate-arithmetic oracle.

    Exhaustive over all 2^n basis states up to ``exhaustive_limit`` qubits,
    randomized sampling beyond.  ``circuit`` overrides the synthesized one,
    which lets external fixtures be checked against the same oracle.
    """
    if circuit is None:
        circuit = build_circuit(geometry, spec)
    if circuit.width != geometry.n:
        raise ValueError(f"circuit width {circuit.width} != geometry width {geometry.n}")
    label = circuit.label or spec.label()

    if geometry.n <= exhaustive_limit:
        got = permutation_of_circuit(circuit, exhaustive_limit).table
        want = oracle_permutation(geometry, spec).table
        mode = "exhaustive"
        checked = geometry.size
        indices = np.arange(geometry.size, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        indices = rng.integers(0, geometry.size, size=samples, dtype=np.int64)
        got = track_basis_indices(circuit, indices)
        want = _oracle_destinations(geometry, spec, indices)
        mode = "sampled"
        checked = samples

    bad = np.nonzero(got != want)[0]
    if bad.size == 0:
        return VerifyReport(label, geometry.n, mode, checked, True)
    first = int(bad[0])
    return VerifyReport(
        label,
        geometry.n,
        mode,
        checked,
        False,
        (int(indices[first]), int(got[first]), int(want[first])),
    )
