"""Amplitude encoding of lattice images and its exact inverse.

Encoding maps each pixel's palette angle a_i to the amplitude
theta_i = a_i / sqrt(S) with S = sum of a_y^2, producing a unit state whose
2^n amplitudes sit in basis-index order.  S is kept as classical metadata:
without it the angles, and therefore the colors, are recoverable only up to
scale.  Decoding multiplies back by sqrt(S) and snaps each recovered angle
to the nearest palette angle, which is exact for any state produced by
encoding followed by permutation circuits.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ImageGeometry
from .image import ClassicalImage
from .palette import ColorPalette

NORM_TOL = 1e-12


class ZeroImageError(ValueError):
    """Every pixel angle is zero, so the normalization is undefined."""


@dataclass
class NassState:
    """Unit amplitude vector over a lattice geometry.

    ``magnitude`` is the pre-normalization constant S; it is None for states
    that did not come from :func:`encode` (e.g. hand-built test states).
    """

    geometry: ImageGeometry
    amplitudes: np.ndarray
    magnitude: float | None = None

    def __post_init__(self) -> None:
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.geometry.size,):
            raise ValueError(
                f"amplitude vector length {amps.shape} != 2^n = {self.geometry.size}"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: |psi|^2 = {norm_sq}")
        self.amplitudes = amps

    @property
    def n(self) -> int:
        return self.geometry.n

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "NassState":
        return NassState(self.geometry, self.amplitudes.copy(), self.magnitude)

    @classmethod
    def from_amplitudes(cls, geometry: ImageGeometry, values) -> "NassState":
        """Normalize ``values`` into a state (handy for test fixtures)."""
        amps = np.asarray(values, dtype=np.complex128)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(geometry, amps / norm)


def encode(image: ClassicalImage, palette: ColorPalette) -> NassState:
    """Angle-encode a lattice image into a unit amplitude vector."""
    image.validate_against(palette)
    angles = palette.angle(image.flat())
    magnitude = float(np.sum(angles * angles))
    if magnitude == 0.0:
        raise ZeroImageError(
            "all pixel angles are zero (every pixel is palette color 1); "
            "the encoded state would be unnormalizable"
        )
    theta = angles / np.sqrt(magnitude)
    return NassState(image.geometry, theta.astype(np.complex128), magnitude)


def decode(state: NassState, palette: ColorPalette) -> ClassicalImage:
    """Recover the lattice image from a state carrying its magnitude S."""
    if state.magnitude is None:
        raise ValueError("state has no stored magnitude S; cannot recover angles")
    if state.magnitude <= 0:
        raise ValueError(f"stored magnitude S must be positive, got {state.magnitude}")
    amps = state.amplitudes
    if np.max(np.abs(amps.imag)) > 1e-9:
        raise ValueError("state has non-negligible imaginary parts; cannot decode colors")
    angles = amps.real * np.sqrt(state.magnitude)
    indices = palette.index_for_angle(angles)
    return ClassicalImage.from_flat(state.geometry, indices)
