"""Gate value types, validation, and circuit serialization."""
import numpy as np
import pytest

from nassimg import (
    Circuit,
    ControlPattern,
    ControlledGate,
    HADAMARD,
    MultiControlledX,
    PAULI_X,
    SingleGate,
    SwapGate,
)
from nassimg.gates import circuit_from_dict, circuit_to_dict, is_permutation_matrix, is_unitary


def test_control_pattern_expands_to_controls():
    cp = ControlPattern(3, 2, (1, 0))
    assert cp.controls() == ((1, 1), (3, 0))
    gate = cp.to_gate()
    assert gate.target == 2
    assert gate.controls == ((1, 1), (3, 0))


def test_width_one_pattern_is_unconditional_x():
    gate = ControlPattern(1, 1, ()).to_gate()
    assert gate.controls == ()


def test_control_pattern_validation():
    with pytest.raises(ValueError):
        ControlPattern(3, 4, (1, 1))
    with pytest.raises(ValueError):
        ControlPattern(3, 1, (1,))
    with pytest.raises(ValueError):
        ControlPattern(3, 1, (1, 2))


def test_unitarity_enforced():
    with pytest.raises(ValueError):
        SingleGate(1, np.array([[1, 0], [0, 2]]))
    with pytest.raises(ValueError):
        ControlledGate(1, 1, 2, np.ones((2, 2)))
    # stored matrices are defensively frozen
    gate = SingleGate(1, PAULI_X)
    with pytest.raises(ValueError):
        gate.matrix[0, 0] = 5


def test_is_unitary_and_permutation_predicates():
    assert is_unitary(HADAMARD)
    assert not is_unitary(np.array([[1, 1], [0, 1]]))
    assert is_permutation_matrix(PAULI_X)
    assert not is_permutation_matrix(HADAMARD)


def test_gate_argument_validation():
    with pytest.raises(ValueError):
        ControlledGate(2, 1, 2, PAULI_X)  # control == target
    with pytest.raises(ValueError):
        ControlledGate(1, 7, 2, PAULI_X)  # bad polarity
    with pytest.raises(ValueError):
        SwapGate(3, 3)
    with pytest.raises(ValueError):
        MultiControlledX(2, ((2, 1),))  # control on the target
    with pytest.raises(ValueError):
        MultiControlledX(1, ((3, 1), (2, 0)))  # out of order


def test_circuit_checks_qubit_ranges():
    with pytest.raises(ValueError):
        Circuit(2, (SingleGate(3, PAULI_X),))
    with pytest.raises(ValueError):
        Circuit(2, (MultiControlledX(1, ((5, 1),)),))
    circuit = Circuit(2, (SwapGate(1, 2), SingleGate(2, HADAMARD)), label="demo")
    assert len(circuit) == 2


def test_circuit_json_roundtrip():
    circuit = Circuit(
        3,
        (
            SingleGate(1, HADAMARD),
            ControlledGate(1, 0, 3, PAULI_X),
            MultiControlledX(2, ((1, 1), (3, 0))),
            SwapGate(2, 3),
        ),
        label="mix",
    )
    back = circuit_from_dict(circuit_to_dict(circuit))
    assert back.width == circuit.width
    assert back.label == circuit.label
    assert len(back) == len(circuit)
    for a, b in zip(back.gates, circuit.gates):
        assert type(a) is type(b)
        if hasattr(a, "matrix"):
            assert np.array_equal(a.matrix, b.matrix)
    assert back.gates[2].controls == ((1, 1), (3, 0))
