"""Amplitude-encoded multidimensional color images and their reversible
geometric transforms.

A k-dimensional color image on a 2^m_1 x ... x 2^m_k lattice is stored as a
2^n-entry amplitude vector (n = m_1 + ... + m_k) whose entries are the
normalized color angles of the pixels.  Geometric transforms (two-point
swaps, symmetric and local flips, right-angle rotations, cyclic
translations) are synthesized as circuits of pattern-controlled X gates,
simulated exactly on the state vector, and verified against an independent
classical pixel-permutation oracle.
"""

from .counting import CostModel, GateCountReport, count_gates
from .gates import (
    Circuit,
    ControlPattern,
    ControlledGate,
    Gate,
    HADAMARD,
    IDENTITY2,
    MultiControlledX,
    PAULI_X,
    SingleGate,
    SwapGate,
)
from .geometry import ImageGeometry, from_bits, parse_geometry, to_bits
from .graycode import GrayPath, circuit_from_gray_path, gray_path, synth_two_point_swap
from .image import ClassicalImage, procedural_gray_image
from .oracle import (
    NonPermutationCircuitError,
    PixelPermutation,
    VerifyReport,
    oracle_permutation,
    permutation_of_circuit,
    verify_transform,
)
from .palette import ColorPalette, color_to_angle, index_to_rgb, rgb_to_index
from .simulator import apply_cnx, apply_controlled, apply_single, apply_swap, run
from .state import NassState, ZeroImageError, decode, encode
from .transforms import (
    LocalFlipSpec,
    RotationAngle,
    RotationSpec,
    SymmetricFlipSpec,
    TransformSpec,
    TranslationSpec,
    TwoPointSwapSpec,
    build_circuit,
    law_gate_counts,
    local_flip,
    orthogonal_rotation,
    parse_pipeline,
    parse_transform,
    symmetric_flip,
    translation,
    translation_stages,
    two_point_swap,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "ClassicalImage",
    "ColorPalette",
    "ControlPattern",
    "ControlledGate",
    "CostModel",
    "Gate",
    "GateCountReport",
    "GrayPath",
    "HADAMARD",
    "IDENTITY2",
    "ImageGeometry",
    "LocalFlipSpec",
    "MultiControlledX",
    "NassState",
    "NonPermutationCircuitError",
    "PAULI_X",
    "PixelPermutation",
    "RotationAngle",
    "RotationSpec",
    "SingleGate",
    "SwapGate",
    "SymmetricFlipSpec",
    "TransformSpec",
    "TranslationSpec",
    "TwoPointSwapSpec",
    "VerifyReport",
    "ZeroImageError",
    "apply_cnx",
    "apply_controlled",
    "apply_single",
    "apply_swap",
    "build_circuit",
    "circuit_from_gray_path",
    "color_to_angle",
    "count_gates",
    "decode",
    "encode",
    "from_bits",
    "gray_path",
    "index_to_rgb",
    "law_gate_counts",
    "local_flip",
    "oracle_permutation",
    "orthogonal_rotation",
    "parse_geometry",
    "parse_pipeline",
    "parse_transform",
    "permutation_of_circuit",
    "procedural_gray_image",
    "rgb_to_index",
    "run",
    "symmetric_flip",
    "synth_two_point_swap",
    "to_bits",
    "translation",
    "translation_stages",
    "two_point_swap",
    "verify_transform",
]
