"""Lattice geometry and basis-index arithmetic.

A k-dimensional image lives on a lattice of size 2^m_1 x ... x 2^m_k and is
addressed by n-bit basis indices, n = m_1 + ... + m_k.  Bit/qubit convention
used throughout the package:

  * qubit positions are 1-based, left to right;
  * qubit 1 is the MOST significant bit of the basis index;
  * axis j owns the contiguous block of qubits starting right after the
    blocks of axes 1..j-1, so the index is the concatenation of the axis
    coordinates v_1 .. v_k written in binary.

All bit-twiddling helpers accept plain ints or numpy integer arrays.
"""
from __future__ import annotations

from dataclasses import dataclass


def to_bits(value: int, width: int) -> str:
    """Binary expansion of ``value`` as a width-long MSB-first bit string."""
    if not 0 <= value < (1 << width):
        raise ValueError(f"value {value} out of range for {width} bits")
    return format(value, f"0{width}b")


def from_bits(bits: str) -> int:
    """Inverse of :func:`to_bits`; accepts only '0'/'1' characters."""
    if not bits or any(ch not in "01" for ch in bits):
        raise ValueError(f"not a bit string: {bits!r}")
    return int(bits, 2)


@dataclass(frozen=True)
class ImageGeometry:
    """Axis layout of a 2^m_1 x ... x 2^m_k lattice.

    ``axis_widths`` holds the per-axis qubit counts m_1..m_k.  Immutable;
    instances may be freely shared between threads.
    """

    axis_widths: tuple[int, ...]

    def __post_init__(self) -> None:
        widths = tuple(int(m) for m in self.axis_widths)
        object.__setattr__(self, "axis_widths", widths)
        if len(widths) < 1:
            raise ValueError("geometry needs at least one axis")
        if any(m < 1 for m in widths):
            raise ValueError(f"axis widths must be >= 1, got {widths}")

    @property
    def k(self) -> int:
        """Number of axes."""
        return len(self.axis_widths)

    @property
    def n(self) -> int:
        """Total qubit count."""
        return sum(self.axis_widths)

    @property
    def size(self) -> int:
        """Number of lattice points, 2^n."""
        return 1 << self.n

    @property
    def shape(self) -> tuple[int, ...]:
        """Lattice extent per axis, (2^m_1, ..., 2^m_k)."""
        return tuple(1 << m for m in self.axis_widths)

    def axis_width(self, j: int) -> int:
        self._check_axis(j)
        return self.axis_widths[j - 1]

    def axis_span(self, j: int) -> tuple[int, int]:
        """1-based (first, last) qubit positions owned by axis j."""
        self._check_axis(j)
        first = sum(self.axis_widths[: j - 1]) + 1
        return first, first + self.axis_widths[j - 1] - 1

    def qubit_value(self, position: int) -> int:
        """Integer weight of the bit at a 1-based qubit position."""
        if not 1 <= position <= self.n:
            raise ValueError(f"qubit position {position} out of range 1..{self.n}")
        return 1 << (self.n - position)

    def axis_shift(self, j: int) -> int:
        """Right-shift that moves axis j's block to the low end of the index."""
        _, last = self.axis_span(j)
        return self.n - last

    def axis_value(self, index, j: int):
        """Coordinate v_j extracted from a basis index (int or ndarray)."""
        shift = self.axis_shift(j)
        return (index >> shift) & ((1 << self.axis_widths[j - 1]) - 1)

    def replace_axis_value(self, index, j: int, value):
        """Basis index with axis j's bit block overwritten by ``value``."""
        shift = self.axis_shift(j)
        mask = ((1 << self.axis_widths[j - 1]) - 1) << shift
        return (index & ~mask) | ((value << shift) & mask)

    def coordinates_of(self, index: int) -> tuple[int, ...]:
        """Split a basis index into its per-axis coordinates (v_1, ..., v_k)."""
        if not 0 <= index < self.size:
            raise ValueError(f"basis index {index} out of range for n={self.n}")
        return tuple(self.axis_value(index, j) for j in range(1, self.k + 1))

    def index_of(self, coordinates) -> int:
        """Reassemble a basis index from per-axis coordinates."""
        coords = tuple(int(v) for v in coordinates)
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(coords)}")
        index = 0
        for m, v in zip(self.axis_widths, coords):
            if not 0 <= v < (1 << m):
                raise ValueError(f"coordinate {v} out of range for axis width {m}")
            index = (index << m) | v
        return index

    def _check_axis(self, j: int) -> None:
        if not 1 <= j <= self.k:
            raise ValueError(f"axis index {j} out of range 1..{self.k}")

    def __str__(self) -> str:
        return "x".join(str(m) for m in self.axis_widths)


def parse_geometry(text: str) -> ImageGeometry:
    """Parse the CLI geometry syntax 'm1xm2x...' (e.g. '7x7')."""
    try:
        widths = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise ValueError(f"bad geometry {text!r}; expected e.g. '7x7' or '2x2x1'") from None
    return ImageGeometry(widths)
