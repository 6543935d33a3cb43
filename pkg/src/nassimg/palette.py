"""Color palettes and the color <-> angle correspondence.

A palette is a sorted set of M colors; palette index i (1-based) maps to the
angle pi*(i-1) / (2*(M-1)), so angles run from 0 to pi/2 in uniform steps.
Two palettes are built in: 'gray256' (levels 0..255) and 'rgb24' (all 24-bit
RGB triples, indexed x*65536 + y*256 + z + 1).  The rgb24 angle map is
computed on the fly; its 16.7M colors are never materialized.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

RGB_COLOR_COUNT = 1 << 24
ANGLE_TOL = 1e-9


def color_to_angle(index, color_count: int):
    """Angle of palette index ``index`` among ``color_count`` colors.

    Accepts scalars or numpy arrays of indices.  Requires at least two
    colors; a single-color palette has no defined angle spacing.
    """
    if color_count < 2:
        raise ValueError(f"need at least 2 colors, got {color_count}")
    idx = np.asarray(index)
    if np.any(idx < 1) or np.any(idx > color_count):
        raise ValueError(f"palette index out of range 1..{color_count}")
    angles = (idx - 1) * (math.pi / (2.0 * (color_count - 1)))
    return float(angles) if np.isscalar(index) else angles


def rgb_to_index(x: int, y: int, z: int) -> int:
    """1-based palette index of an RGB triple in the 24-bit palette."""
    for comp in (x, y, z):
        if not 0 <= comp <= 255:
            raise ValueError(f"RGB component {comp} out of range 0..255")
    return x * 256 * 256 + y * 256 + z + 1


def index_to_rgb(index: int) -> tuple[int, int, int]:
    """Inverse of :func:`rgb_to_index`."""
    if not 1 <= index <= RGB_COLOR_COUNT:
        raise ValueError(f"palette index {index} out of range 1..{RGB_COLOR_COUNT}")
    v = index - 1
    return (v >> 16) & 0xFF, (v >> 8) & 0xFF, v & 0xFF


@dataclass(frozen=True)
class ColorPalette:
    """Sorted color set with the uniform angle map.

    ``colors`` is materialized only for custom palettes; the built-in
    palettes derive colors from the index arithmetically.
    """

    palette_id: str
    color_count: int
    colors: tuple | None = None

    def __post_init__(self) -> None:
        if self.color_count < 2:
            raise ValueError("palette must have at least 2 colors")
        if self.colors is not None and len(self.colors) != self.color_count:
            raise ValueError("color list length must equal color_count")

    # -- constructors --------------------------------------------------

    @classmethod
    def gray256(cls) -> "ColorPalette":
        return cls("gray256", 256)

    @classmethod
    def rgb24(cls) -> "ColorPalette":
        return cls("rgb24", RGB_COLOR_COUNT)

    @classmethod
    def from_colors(cls, colors, palette_id: str = "custom") -> "ColorPalette":
        normalized = tuple(
            tuple(int(c) for c in col) if isinstance(col, (tuple, list)) else int(col)
            for col in colors
        )
        if len(set(normalized)) != len(normalized):
            raise ValueError("palette colors must be distinct")
        return cls(palette_id, len(normalized), normalized)

    # -- angle map -----------------------------------------------------

    @property
    def angle_step(self) -> float:
        return math.pi / (2.0 * (self.color_count - 1))

    def angle(self, index):
        """Angle of palette index ``index`` (scalar or ndarray)."""
        return color_to_angle(index, self.color_count)

    def index_for_angle(self, angle):
        """Nearest palette index for an angle; ties resolve to the lower index.

        Angles outside [0, pi/2] beyond a 1e-9 tolerance are rejected.
        """
        a = np.asarray(angle, dtype=np.float64)
        if np.any(a < -ANGLE_TOL) or np.any(a > math.pi / 2.0 + ANGLE_TOL):
            raise ValueError("recovered angle outside [0, pi/2] beyond 1e-9")
        # ceil(x - 0.5) is round-half-down: exact midpoints go to the lower index
        nearest = np.ceil(a / self.angle_step - 0.5).astype(np.int64) + 1
        nearest = np.clip(nearest, 1, self.color_count)
        return int(nearest) if np.isscalar(angle) else nearest

    # -- colors ----------------------------------------------------------

    def color_of(self, index: int):
        """The color stored at a palette index (level, triple, or custom entry)."""
        if not 1 <= index <= self.color_count:
            raise ValueError(f"palette index {index} out of range 1..{self.color_count}")
        if self.colors is not None:
            return self.colors[index - 1]
        if self.palette_id == "gray256":
            return index - 1
        if self.palette_id == "rgb24":
            return index_to_rgb(index)
        raise ValueError(f"palette {self.palette_id!r} has no color table")

    def index_of_color(self, color) -> int:
        """Palette index of a color value; inverse of :meth:`color_of`."""
        if self.colors is not None:
            key = tuple(int(c) for c in color) if isinstance(color, (tuple, list)) else int(color)
            try:
                return self.colors.index(key) + 1
            except ValueError:
                raise ValueError(f"color {color!r} not in palette") from None
        if self.palette_id == "gray256":
            level = int(color)
            if not 0 <= level <= 255:
                raise ValueError(f"gray level {level} out of range 0..255")
            return level + 1
        if self.palette_id == "rgb24":
            x, y, z = (int(c) for c in color)
            return rgb_to_index(x, y, z)
        raise ValueError(f"palette {self.palette_id!r} has no color table")
