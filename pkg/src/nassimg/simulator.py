"""Exact state-vector application of gates and circuits.

Kernels mutate a working copy of the amplitude vector in place using
bit-masked index arithmetic; the public functions are observationally pure
and return a fresh state.  Gates whose 2x2 matrix is exactly I or X, and all
multi-controlled X / swap gates, are applied by pure amplitude relocation:
no arithmetic ever touches the moved values, so permutation circuits are
exact to the last bit.

Control-matching convention: a pattern-controlled X fires when the control
bits EQUAL the stored pattern.  (Stated here because the source definition
of the gate family is self-contradictory; the worked example C^3(X_2)|111> =
|101> with pattern bits 1,1 and the Gray-code synthesis both force
fire-on-match, which is what this simulator and the whole package use.)
"""
from __future__ import annotations

import numpy as np

from .gates import (
    Circuit,
    ControlledGate,
    Gate,
    IDENTITY2,
    MultiControlledX,
    PAULI_X,
    SingleGate,
    SwapGate,
    is_unitary,
)
from .state import NassState

# ---------------------------------------------------------------------------
# in-place kernels on a raw amplitude array (width n, qubit 1 = MSB)
# ---------------------------------------------------------------------------


def _pair_bases(n: int, target: int) -> np.ndarray:
    """Indices with the target bit clear, partner = index | bit."""
    q = n - target  # 0-based bit from the LSB
    step = 1 << q
    block = step << 1
    base = np.arange(0, 1 << n, block, dtype=np.int64)
    off = np.arange(step, dtype=np.int64)
    return (base[:, None] + off[None, :]).ravel()


def _mix_pairs(amps: np.ndarray, i0: np.ndarray, i1: np.ndarray, u: np.ndarray) -> None:
    a = amps[i0].copy()
    b = amps[i1].copy()
    amps[i0] = u[0, 0] * a + u[0, 1] * b
    amps[i1] = u[1, 0] * a + u[1, 1] * b


def _relocate_pairs(amps: np.ndarray, i0: np.ndarray, i1: np.ndarray) -> None:
    tmp = amps[i0].copy()
    amps[i0] = amps[i1]
    amps[i1] = tmp


def _single_inplace(amps: np.ndarray, n: int, target: int, u: np.ndarray) -> None:
    i0 = _pair_bases(n, target)
    i1 = i0 | (1 << (n - target))
    if np.array_equal(u, PAULI_X):
        _relocate_pairs(amps, i0, i1)
    elif not np.array_equal(u, IDENTITY2):
        _mix_pairs(amps, i0, i1, u)


def _controlled_inplace(
    amps: np.ndarray, n: int, control: int, polarity: int, target: int, u: np.ndarray
) -> None:
    cb = 1 << (n - control)
    i0 = _pair_bases(n, target)
    i0 = i0[((i0 & cb) != 0) == bool(polarity)]
    i1 = i0 | (1 << (n - target))
    if np.array_equal(u, PAULI_X):
        _relocate_pairs(amps, i0, i1)
    elif not np.array_equal(u, IDENTITY2):
        _mix_pairs(amps, i0, i1, u)


def _control_masks(gate: MultiControlledX, n: int) -> tuple[int, int]:
    cmask = 0
    cval = 0
    for pos, bit in gate.controls:
        b = 1 << (n - pos)
        cmask |= b
        if bit:
            cval |= b
    return cmask, cval


def _mcx_inplace(amps: np.ndarray, n: int, gate: MultiControlledX, idx: np.ndarray) -> None:
    tb = 1 << (n - gate.target)
    cmask, cval = _control_masks(gate, n)
    i0 = idx[(idx & (cmask | tb)) == cval]
    _relocate_pairs(amps, i0, i0 | tb)


def _swap_inplace(amps: np.ndarray, n: int, a: int, b: int, idx: np.ndarray) -> None:
    ba = 1 << (n - a)
    bb = 1 << (n - b)
    i0 = idx[(idx & (ba | bb)) == bb]  # bit a clear, bit b set; partner flips both
    _relocate_pairs(amps, i0, i0 ^ (ba | bb))


def _apply_gate_inplace(amps: np.ndarray, n: int, gate: Gate, idx: np.ndarray) -> None:
    if isinstance(gate, SingleGate):
        _single_inplace(amps, n, gate.target, gate.matrix)
    elif isinstance(gate, ControlledGate):
        _controlled_inplace(amps, n, gate.control, gate.polarity, gate.target, gate.matrix)
    elif isinstance(gate, MultiControlledX):
        _mcx_inplace(amps, n, gate, idx)
    elif isinstance(gate, SwapGate):
        _swap_inplace(amps, n, gate.qubit_a, gate.qubit_b, idx)
    else:
        raise TypeError(f"unknown gate type {type(gate).__name__}")


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def _check_target(n: int, target: int, name: str = "target") -> None:
    if not 1 <= target <= n:
        raise ValueError(f"{name} qubit {target} out of range 1..{n}")


def apply_single(state: NassState, matrix, target: int) -> NassState:
    """Apply a 2x2 unitary to one qubit."""
    u = np.asarray(matrix, dtype=np.complex128)
    if not is_unitary(u):
        raise ValueError("matrix is not unitary within 1e-12")
    n = state.n
    _check_target(n, target)
    amps = state.amplitudes.copy()
    _single_inplace(amps, n, target, u)
    return NassState(state.geometry, amps, state.magnitude)


def apply_controlled(state: NassState, matrix, control: int, polarity: int, target: int) -> NassState:
    """Apply a 2x2 unitary to ``target`` where ``control``'s bit equals ``polarity``."""
    u = np.asarray(matrix, dtype=np.complex128)
    if not is_unitary(u):
        raise ValueError("matrix is not unitary within 1e-12")
    if polarity not in (0, 1):
        raise ValueError(f"polarity must be 0 or 1, got {polarity}")
    if control == target:
        raise ValueError("control and target must differ")
    n = state.n
    _check_target(n, target)
    _check_target(n, control, "control")
    amps = state.amplitudes.copy()
    _controlled_inplace(amps, n, control, polarity, target, u)
    return NassState(state.geometry, amps, state.magnitude)


def apply_cnx(state: NassState, gate: MultiControlledX) -> NassState:
    """Flip the target bit of every basis state whose controls match."""
    n = state.n
    for q in gate.qubits():
        _check_target(n, q, "gate")
    amps = state.amplitudes.copy()
    _mcx_inplace(amps, n, gate, np.arange(1 << n, dtype=np.int64))
    return NassState(state.geometry, amps, state.magnitude)


def apply_swap(state: NassState, qubit_a: int, qubit_b: int) -> NassState:
    """Exchange two qubits' bits in every basis state."""
    if qubit_a == qubit_b:
        raise ValueError("swap qubits must differ")
    n = state.n
    _check_target(n, qubit_a, "swap")
    _check_target(n, qubit_b, "swap")
    amps = state.amplitudes.copy()
    _swap_inplace(amps, n, qubit_a, qubit_b, np.arange(1 << n, dtype=np.int64))
    return NassState(state.geometry, amps, state.magnitude)


def run(circuit: Circuit, state: NassState) -> NassState:
    """Apply a circuit's gates in list order (left to right)."""
    if circuit.width != state.n:
        raise ValueError(f"circuit width {circuit.width} != state width {state.n}")
    amps = state.amplitudes.copy()
    idx = np.arange(1 << circuit.width, dtype=np.int64)
    for gate in circuit.gates:
        _apply_gate_inplace(amps, circuit.width, gate, idx)
    return NassState(state.geometry, amps, state.magnitude)
