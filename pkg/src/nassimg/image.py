"""Classical lattice images: palette indices on a 2^m_1 x ... x 2^m_k grid.

Pixels are stored as a k-dimensional integer array in C order with axis 1
slowest, so the flattened array lists pixels in basis-index order, matching
the MSB-first qubit convention.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ImageGeometry
from .palette import ColorPalette


@dataclass(frozen=True)
class ClassicalImage:
    """A lattice of 1-based palette indices with its geometry."""

    geometry: ImageGeometry
    pixels: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.pixels, dtype=np.int64)
        if arr.shape != self.geometry.shape:
            raise ValueError(
                f"pixel array shape {arr.shape} != lattice shape {self.geometry.shape}"
            )
        if arr.size and arr.min() < 1:
            raise ValueError("palette indices are 1-based; found a value < 1")
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_flat(cls, geometry: ImageGeometry, flat) -> "ClassicalImage":
        """Build from pixels listed in basis-index order (axis 1 slowest)."""
        arr = np.asarray(flat, dtype=np.int64)
        if arr.size != geometry.size:
            raise ValueError(f"expected {geometry.size} pixels, got {arr.size}")
        return cls(geometry, arr.reshape(geometry.shape))

    @classmethod
    def uniform(cls, geometry: ImageGeometry, index: int) -> "ClassicalImage":
        return cls(geometry, np.full(geometry.shape, index, dtype=np.int64))

    def flat(self) -> np.ndarray:
        """Pixels in basis-index order."""
        return self.pixels.reshape(-1)

    def validate_against(self, palette: ColorPalette) -> None:
        if self.pixels.max(initial=1) > palette.color_count:
            raise ValueError(
                f"pixel index {int(self.pixels.max())} exceeds palette size "
                f"{palette.color_count}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassicalImage):
            return NotImplemented
        return self.geometry == other.geometry and np.array_equal(self.pixels, other.pixels)


def procedural_gray_image(height: int = 128, width: int = 128, seed: int = 11) -> np.ndarray:
    """Deterministic gray test picture with deliberately asymmetric features.

    Returns levels 0..255, shape (height, width).  The layout (off-center
    disk, corner block, diagonal band, seeded speckle) makes every flip,
    quarter-turn, and cyclic shift produce a picture distinct from the
    original, so orientation bugs cannot cancel out.
    """
    r = np.arange(height)[:, None]
    c = np.arange(width)[None, :]
    img = (r * 96) // max(height - 1, 1) + (c * 64) // max(width - 1, 1)

    cy, cx = height * 5 // 16, width * 11 // 16
    radius = min(height, width) // 6
    disk = (r - cy) ** 2 + (c - cx) ** 2 <= radius**2
    img = np.where(disk, 230, img)

    img[height * 3 // 4 : height * 7 // 8, width // 16 : width // 4] = 30
    band = np.abs((r - c) - height // 8) < max(2, height // 32)
    img = np.where(band, 140, img)

    rng = np.random.default_rng(seed)
    speckle = rng.integers(0, 256, size=(height, width))
    mask = rng.random((height, width)) < 0.02
    img = np.where(mask, speckle, img)
    return np.clip(img, 0, 255).astype(np.int64)
