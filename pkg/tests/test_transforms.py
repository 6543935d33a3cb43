"""Transform circuit builders, gate-count laws, and the mini-language."""
import numpy as np
import pytest

from nassimg import (
    ControlledGate,
    ImageGeometry,
    LocalFlipSpec,
    RotationAngle,
    RotationSpec,
    SingleGate,
    SwapGate,
    SymmetricFlipSpec,
    TranslationSpec,
    TwoPointSwapSpec,
    build_circuit,
    count_gates,
    law_gate_counts,
    local_flip,
    oracle_permutation,
    orthogonal_rotation,
    parse_pipeline,
    parse_transform,
    permutation_of_circuit,
    symmetric_flip,
    translation,
    translation_stages,
    two_point_swap,
)


# --- symmetric flips ---------------------------------------------------------


def test_flip_five_axes_example():
    geo = ImageGeometry((1, 1, 1, 1, 1))
    circuit = symmetric_flip(geo, 1)
    assert [g.target for g in circuit.gates] == [2, 3, 4, 5]
    perm = permutation_of_circuit(circuit)
    assert perm.table[0b00000] == 0b01111


def test_flip_mixed_axes_example():
    geo = ImageGeometry((2, 2, 1))
    circuit = symmetric_flip(geo, 1)
    assert [g.target for g in circuit.gates] == [3, 4, 5]
    perm = permutation_of_circuit(circuit)
    assert perm.table[0] == 0b00111  # |00>|11>|1>


def test_flip_single_axis_is_empty():
    assert len(symmetric_flip(ImageGeometry((4,)), 1)) == 0


def test_flip_gate_count_law():
    for widths in [(3,), (2, 3), (1, 2, 3), (2, 2, 2, 2)]:
        geo = ImageGeometry(widths)
        for j in range(1, geo.k + 1):
            circuit = symmetric_flip(geo, j)
            assert len(circuit) == geo.n - geo.axis_width(j)
            assert count_gates(circuit).singles == len(circuit)


# --- local flips -------------------------------------------------------------


def test_local_flip_five_axes_example():
    geo = ImageGeometry((1, 1, 1, 1, 1))
    circuit = local_flip(geo, LocalFlipSpec(1, 2, 1, 1))
    assert len(circuit) == 3
    assert all(isinstance(g, ControlledGate) and g.control == 2 for g in circuit.gates)
    perm = permutation_of_circuit(circuit)
    # branch with qubit 2 set flips qubits 3..5; the other branch is fixed
    assert perm.table[0b01000] == 0b01111
    assert perm.table[0b00000] == 0b00000


def test_local_flip_mixed_axes_example():
    geo = ImageGeometry((2, 2, 1))
    circuit = local_flip(geo, LocalFlipSpec(1, 2, 1, 1))
    assert len(circuit) == 2
    assert sorted(g.target for g in circuit.gates) == [4, 5]
    assert all(g.control == 3 for g in circuit.gates)
    perm = permutation_of_circuit(circuit)
    # |i1 i2>|1 i4>|i5> -> |i1 i2>|1 ~i4>|~i5>
    assert perm.table[0b00100] == 0b00111
    assert perm.table[0b00000] == 0b00000


def test_local_flip_polarity_zero_against_oracle():
    geo = ImageGeometry((2, 2, 1))
    spec = LocalFlipSpec(1, 2, 1, 0)
    assert permutation_of_circuit(local_flip(geo, spec)) == oracle_permutation(geo, spec)


def test_local_flip_rejects_equal_axes():
    with pytest.raises(ValueError):
        LocalFlipSpec(2, 2, 1, 1)


def test_local_flip_bit_range_checked():
    geo = ImageGeometry((2, 2))
    with pytest.raises(ValueError):
        local_flip(geo, LocalFlipSpec(1, 2, 3, 1))


def test_local_flip_gate_count_law():
    for widths in [(1, 1), (2, 3), (2, 2, 1), (1, 3, 2, 1)]:
        geo = ImageGeometry(widths)
        for x in range(1, geo.k + 1):
            for j in range(1, geo.k + 1):
                if x == j:
                    continue
                circuit = local_flip(geo, LocalFlipSpec(x, j, 1, 1))
                assert len(circuit) == geo.n - 1 - geo.axis_width(x)


# --- rotations ---------------------------------------------------------------


def test_quarter_turn_on_one_bit_axes():
    geo = ImageGeometry((1, 1))
    perm = permutation_of_circuit(orthogonal_rotation(geo, 1, 2, RotationAngle.QUARTER))
    assert perm.table[geo.index_of((0, 0))] == geo.index_of((0, 1))


def test_half_turn_complements_both_axes():
    geo = ImageGeometry((2, 2, 1))
    perm = permutation_of_circuit(orthogonal_rotation(geo, 1, 2, RotationAngle.HALF))
    for i in range(geo.size):
        v1, v2, v3 = geo.coordinates_of(i)
        assert perm.table[i] == geo.index_of((3 - v1, 3 - v2, v3))


def test_rotation_gate_budget():
    geo = ImageGeometry((3, 3, 1))
    quarter = count_gates(orthogonal_rotation(geo, 1, 2, RotationAngle.QUARTER))
    assert quarter.swaps == 3 and quarter.singles == 3
    three_quarter = count_gates(
        orthogonal_rotation(geo, 1, 2, RotationAngle.THREE_QUARTER)
    )
    assert three_quarter.swaps == 3 and three_quarter.singles == 3
    half = count_gates(orthogonal_rotation(geo, 1, 2, RotationAngle.HALF))
    assert half.singles == 6 and half.swaps == 0


def test_quarter_turn_internal_order_swaps_then_x():
    geo = ImageGeometry((2, 2))
    gates = orthogonal_rotation(geo, 1, 2, RotationAngle.QUARTER).gates
    assert [type(g) for g in gates] == [SwapGate, SwapGate, SingleGate, SingleGate]
    assert [g.target for g in gates[2:]] == [3, 4]  # X lands on axis y


def test_rotation_validation():
    geo = ImageGeometry((2, 3))
    with pytest.raises(ValueError):
        orthogonal_rotation(geo, 1, 2, RotationAngle.QUARTER)  # unequal widths
    with pytest.raises(ValueError):
        orthogonal_rotation(geo, 1, 1, RotationAngle.HALF)


def test_rotation_group_law_on_permutations():
    geo = ImageGeometry((2, 2))
    quarter = permutation_of_circuit(orthogonal_rotation(geo, 1, 2, RotationAngle.QUARTER))
    half = permutation_of_circuit(orthogonal_rotation(geo, 1, 2, RotationAngle.HALF))
    three_quarter = permutation_of_circuit(
        orthogonal_rotation(geo, 1, 2, RotationAngle.THREE_QUARTER)
    )
    assert quarter.compose(quarter) == half
    assert quarter.compose(half) == three_quarter
    assert quarter.compose(three_quarter).is_identity()


# --- translations -------------------------------------------------------------


def test_translation_single_bit_axis_is_one_x():
    geo = ImageGeometry((1, 1, 1, 1, 1))
    circuit = translation(geo, 4)
    assert len(circuit) == 1
    gate = circuit.gates[0]
    assert gate.target == 4 and gate.controls == ()


def test_translation_stage_structure():
    geo = ImageGeometry((2, 2, 1))
    stages = translation_stages(geo, 2)
    assert len(stages) == 3
    assert [s.label for s in stages] == [
        "trans:2 stage 3<->0",
        "trans:2 stage 2<->3",
        "trans:2 stage 1<->2",
    ]
    for stage in stages:
        for gate in stage.gates:
            assert set(gate.qubits()) <= {3, 4}  # confined to axis 2's block
    flat = translation(geo, 2)
    assert len(flat) == sum(len(s) for s in stages)


def test_translation_is_the_cyclic_successor():
    for widths, axis in [((2, 2, 1), 2), ((3,), 1), ((1, 3), 2)]:
        geo = ImageGeometry(widths)
        perm = permutation_of_circuit(translation(geo, axis))
        assert perm == oracle_permutation(geo, TranslationSpec(axis))


def test_translation_full_cycle_is_identity():
    geo = ImageGeometry((1, 3))
    perm = permutation_of_circuit(translation(geo, 2))
    power = perm
    for _ in range(7):
        power = perm.compose(power)
    assert power.is_identity()


def test_translation_stage_count_law():
    for widths, axis in [((4,), 1), ((2, 3), 2), ((1, 1, 2), 3)]:
        geo = ImageGeometry(widths)
        assert len(translation_stages(geo, axis)) == (1 << geo.axis_width(axis)) - 1


# --- two-point swap from coordinates ------------------------------------------


def test_two_point_swap_from_coordinates():
    geo = ImageGeometry((2, 2, 1))
    circuit = two_point_swap(geo, TwoPointSwapSpec((0, 2, 1), (3, 3, 0)))
    assert len(circuit) == 7
    perm = permutation_of_circuit(circuit)
    assert perm.table[0b00101] == 0b11110
    with pytest.raises(ValueError):
        two_point_swap(geo, TwoPointSwapSpec((0, 0, 0), (0, 0, 0)))


# --- gate-count laws dispatch --------------------------------------------------


def test_law_gate_counts_table():
    geo = ImageGeometry((2, 2, 1))
    assert law_gate_counts(geo, TwoPointSwapSpec((0, 2, 1), (3, 3, 0))) == {
        "multi_controlled": 7
    }
    assert law_gate_counts(geo, SymmetricFlipSpec(1)) == {"singles": 3}
    assert law_gate_counts(geo, LocalFlipSpec(1, 2, 1, 1)) == {"controlled": 2}
    assert law_gate_counts(geo, RotationSpec(1, 2, RotationAngle.QUARTER)) == {
        "swaps": 2,
        "singles": 2,
    }
    assert law_gate_counts(geo, RotationSpec(1, 2, RotationAngle.HALF)) == {"singles": 4}
    assert law_gate_counts(geo, TranslationSpec(2)) == {"stages": 3}


# --- mini-language --------------------------------------------------------------


@pytest.mark.parametrize(
    "text, spec",
    [
        ("flip:2", SymmetricFlipSpec(2)),
        ("lflip:1,2,1,0", LocalFlipSpec(1, 2, 1, 0)),
        ("rot:1,2,pi/2", RotationSpec(1, 2, RotationAngle.QUARTER)),
        ("rot:1,2,pi", RotationSpec(1, 2, RotationAngle.HALF)),
        ("rot:1,2,3pi/2", RotationSpec(1, 2, RotationAngle.THREE_QUARTER)),
        ("trans:3", TranslationSpec(3)),
        ("swap:(0,2,1),(3,3,0)", TwoPointSwapSpec((0, 2, 1), (3, 3, 0))),
    ],
)
def test_parse_transform(text, spec):
    parsed = parse_transform(text)
    assert parsed == spec
    assert parse_transform(parsed.label()) == spec


@pytest.mark.parametrize(
    "text",
    ["flip", "flip:x", "rot:1,2,pi/3", "swap:0,1", "swap:(1),(1,2)x", "twirl:1", "lflip:1,2"],
)
def test_parse_transform_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_transform(text)


def test_parse_pipeline_with_repeats():
    stages = parse_pipeline("flip:1; trans:2*10 ;rot:1,2,pi")
    assert stages == [
        (SymmetricFlipSpec(1), 1),
        (TranslationSpec(2), 10),
        (RotationSpec(1, 2, RotationAngle.HALF), 1),
    ]
    with pytest.raises(ValueError):
        parse_pipeline("trans:1*0")
    with pytest.raises(ValueError):
        parse_pipeline("  ;  ")


def test_build_circuit_dispatch():
    geo = ImageGeometry((1, 1))
    for text in ["flip:1", "lflip:1,2,1,1", "rot:1,2,pi", "trans:2", "swap:(0,0),(1,1)"]:
        spec = parse_transform(text)
        circuit = build_circuit(geo, spec)
        assert circuit.label == spec.label()
        assert permutation_of_circuit(circuit) == oracle_permutation(geo, spec)
