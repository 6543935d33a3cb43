"""Exact gate application on state vectors."""
import numpy as np
import pytest

from nassimg import (
    Circuit,
    ControlPattern,
    ControlledGate,
    HADAMARD,
    ImageGeometry,
    MultiControlledX,
    NassState,
    PAULI_X,
    SingleGate,
    SwapGate,
    apply_cnx,
    apply_controlled,
    apply_single,
    apply_swap,
    run,
)


def random_state(widths, rng, complex_amps=True):
    geo = ImageGeometry(widths)
    amps = rng.standard_normal(geo.size)
    if complex_amps:
        amps = amps + 1j * rng.standard_normal(geo.size)
    return NassState.from_amplitudes(geo, amps)


def basis_state(widths, index):
    geo = ImageGeometry(widths)
    amps = np.zeros(geo.size, dtype=complex)
    amps[index] = 1.0
    return NassState(geo, amps)


def test_x_exchanges_the_two_amplitudes():
    geo = ImageGeometry((1,))
    alpha, beta = 0.6, 0.8
    state = NassState(geo, np.array([alpha, beta], dtype=complex))
    out = apply_single(state, PAULI_X, 1)
    assert out.amplitudes[0] == beta and out.amplitudes[1] == alpha


def test_identity_leaves_state_alone():
    rng = np.random.default_rng(0)
    state = random_state((2, 1), rng)
    out = apply_single(state, np.eye(2), 2)
    assert np.array_equal(out.amplitudes, state.amplitudes)


def test_hadamard_twice_restores_the_state():
    rng = np.random.default_rng(1)
    state = random_state((3, 3), rng)
    out = state
    for _ in range(2):
        out = apply_single(out, HADAMARD, 4)
    assert np.max(np.abs(out.amplitudes - state.amplitudes)) <= 1e-12


def test_single_gate_norm_preserved():
    rng = np.random.default_rng(2)
    state = random_state((5,), rng)
    out = apply_single(state, HADAMARD, 3)
    assert abs(out.norm() - 1.0) <= 1e-12


@pytest.mark.parametrize(
    "polarity, start, expect",
    [
        (1, 0b10, 0b11),  # control 1 matches polarity 1: target flips
        (0, 0b10, 0b10),  # control 1 mismatches polarity 0: untouched
        (0, 0b00, 0b01),  # control 0 matches polarity 0
    ],
)
def test_controlled_not_polarity(polarity, start, expect):
    state = basis_state((1, 1), start)
    out = apply_controlled(state, PAULI_X, 1, polarity, 2)
    assert out.amplitudes[expect] == 1.0
    assert np.sum(out.amplitudes != 0) == 1


def test_cnx_worked_example():
    gate = ControlPattern(3, 2, (1, 1)).to_gate()
    out = apply_cnx(basis_state((1, 1, 1), 0b111), gate)
    assert out.amplitudes[0b101] == 1.0
    out = apply_cnx(basis_state((1, 1, 1), 0b011), gate)
    assert out.amplitudes[0b011] == 1.0  # controls (0,1) mismatch the pattern


def test_cnx_matches_bruteforce_transposition():
    # independent reference: pure-python bit logic over all 256 basis states
    rng = np.random.default_rng(8)
    n = 8
    target = int(rng.integers(1, n + 1))
    pattern = tuple(int(b) for b in rng.integers(0, 2, size=n - 1))
    gate = ControlPattern(n, target, pattern).to_gate()
    positions = [p for p in range(1, n + 1) if p != target]
    state = random_state((n,), rng)
    out = apply_cnx(state, gate)
    for i in range(1 << n):
        bits = [(i >> (n - p)) & 1 for p in range(1, n + 1)]
        controls = [bits[p - 1] for p in positions]
        j = i ^ (1 << (n - target)) if tuple(controls) == pattern else i
        assert out.amplitudes[j] == state.amplitudes[i]


def test_cnx_is_an_involution():
    rng = np.random.default_rng(9)
    gate = ControlPattern(6, 3, (1, 0, 1, 0, 0)).to_gate()
    state = random_state((6,), rng)
    twice = apply_cnx(apply_cnx(state, gate), gate)
    assert np.array_equal(twice.amplitudes, state.amplitudes)


def test_swap_action_on_basis_states():
    out = apply_swap(basis_state((1, 1), 0b01), 1, 2)
    assert out.amplitudes[0b10] == 1.0
    out = apply_swap(basis_state((1, 1), 0b00), 1, 2)
    assert out.amplitudes[0b00] == 1.0


@pytest.mark.parametrize("polarity", [0, 1])
def test_swap_equals_three_controlled_nots(polarity):
    # the three-gate ladder: CX(a->b), CX(b->a), CX(a->b) at either polarity
    geo = (1, 1)
    for i in range(4):
        state = basis_state(geo, i)
        direct = apply_swap(state, 1, 2)
        ladder = state
        if polarity == 1:
            for control, target in [(1, 2), (2, 1), (1, 2)]:
                ladder = apply_controlled(ladder, PAULI_X, control, 1, target)
        else:
            for control, target in [(1, 2), (2, 1), (1, 2)]:
                ladder = apply_controlled(ladder, PAULI_X, control, 0, target)
        assert np.array_equal(direct.amplitudes, ladder.amplitudes), (polarity, i)


def test_empty_circuit_is_identity():
    rng = np.random.default_rng(10)
    state = random_state((2, 2), rng)
    out = run(Circuit(4, ()), state)
    assert np.array_equal(out.amplitudes, state.amplitudes)


def test_swap_circuit_on_five_qubit_state():
    from nassimg import synth_two_point_swap

    rng = np.random.default_rng(11)
    state = random_state((2, 2, 1), rng)
    out = run(synth_two_point_swap(0b00101, 0b11110, 5), state)
    s, t = 0b00101, 0b11110
    assert out.amplitudes[t] == state.amplitudes[s]
    assert out.amplitudes[s] == state.amplitudes[t]
    others = [i for i in range(32) if i not in (s, t)]
    assert np.array_equal(out.amplitudes[others], state.amplitudes[others])


def test_permutation_circuit_norm_exact():
    from nassimg import translation

    rng = np.random.default_rng(12)
    geo = ImageGeometry((3, 2))
    state = random_state(geo.axis_widths, rng)
    out = run(translation(geo, 1), state)
    key = lambda z: (z.real, z.imag)
    assert sorted(out.amplitudes.tolist(), key=key) == sorted(
        state.amplitudes.tolist(), key=key
    )


def test_run_is_linear():
    rng = np.random.default_rng(13)
    geo = ImageGeometry((3, 1))
    s1 = random_state(geo.axis_widths, rng)
    s2 = random_state(geo.axis_widths, rng)
    a, b = 0.3 - 0.2j, 0.5 + 0.1j
    combo = a * s1.amplitudes + b * s2.amplitudes
    scale = np.linalg.norm(combo)
    circuit = Circuit(
        4,
        (
            SingleGate(2, HADAMARD),
            MultiControlledX(1, ((2, 1), (3, 0), (4, 1))),
            SwapGate(1, 4),
        ),
    )
    left = run(circuit, NassState(geo, combo / scale)).amplitudes
    right = (a * run(circuit, s1).amplitudes + b * run(circuit, s2).amplitudes) / scale
    assert np.max(np.abs(left - right)) <= 1e-12


def test_error_paths():
    rng = np.random.default_rng(14)
    state = random_state((2,), rng)
    with pytest.raises(ValueError):
        apply_single(state, np.array([[1, 1], [0, 1]]), 1)  # not unitary
    with pytest.raises(ValueError):
        apply_single(state, PAULI_X, 3)  # bad target
    with pytest.raises(ValueError):
        apply_controlled(state, PAULI_X, 2, 1, 2)  # control == target
    with pytest.raises(ValueError):
        apply_swap(state, 1, 1)
    with pytest.raises(ValueError):
        run(Circuit(3, ()), state)  # width mismatch
    with pytest.raises(ValueError):
        apply_cnx(state, MultiControlledX(3))  # gate off the end of the register
