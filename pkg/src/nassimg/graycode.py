"""Gray-code routing and synthesis of two-point swap circuits.

A two-point swap exchanges the amplitudes at exactly two basis indices s and
t and fixes everything else.  It is synthesized by walking a Gray path
g_1 = s, ..., g_m = t (adjacent elements differ in one bit) and emitting one
pattern-controlled X per step, mirrored:

    C_1 C_2 ... C_{m-2} C_{m-1} C_{m-2} ... C_1      (2m - 3 gates)

where C_i flips the bit at which g_i and g_{i+1} differ, controlled on the
remaining bits of g_i.  The ascending pass walks s to t, the mirrored
descending pass walks t back to s, and every off-path basis state is fixed
by at most two mutually cancelling gates.  The mirror is emitted literally,
without algebraic simplification, so the gate count is exactly
2 * HammingDistance(s, t) - 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gates import Circuit, ControlPattern, MultiControlledX
from .geometry import to_bits


@dataclass(frozen=True)
class GrayPath:
    """A sequence of n-bit values whose neighbors differ in exactly one bit."""

    width: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(int(g) for g in self.elements))
        if len(self.elements) < 1:
            raise ValueError("a Gray path needs at least one element")
        for g in self.elements:
            if not 0 <= g < (1 << self.width):
                raise ValueError(f"element {g} out of range for width {self.width}")
        for a, b in zip(self.elements, self.elements[1:]):
            if bin(a ^ b).count("1") != 1:
                raise ValueError(
                    f"adjacent elements {to_bits(a, self.width)} and "
                    f"{to_bits(b, self.width)} differ in more than one bit"
                )

    def __len__(self) -> int:
        return len(self.elements)

    def as_columns(self) -> str:
        """Rows of space-separated bits, one path element per line."""
        return "\n".join(" ".join(to_bits(g, self.width)) for g in self.elements)


def gray_path(s: int, t: int, width: int) -> GrayPath:
    """Canonical Gray path from s to t: flip differing bits MSB-first.

    The path has HammingDistance(s, t) + 1 elements.  Other valid paths
    exist (any bit-flip order works); this one is deterministic.
    """
    if not 0 <= s < (1 << width) or not 0 <= t < (1 << width):
        raise ValueError(f"endpoints must be {width}-bit values")
    if s == t:
        raise ValueError("endpoints must differ")
    elements = [s]
    current = s
    diff = s ^ t
    for position in range(1, width + 1):
        bit = 1 << (width - position)
        if diff & bit:
            current ^= bit
            elements.append(current)
    return GrayPath(width, tuple(elements))


def _step_gate(width: int, here: int, there: int) -> MultiControlledX:
    """Gate sending |here> <-> |there| for neighbors differing at one bit."""
    diff = here ^ there
    target = width - diff.bit_length() + 1
    pattern = tuple(
        (here >> (width - p)) & 1 for p in range(1, width + 1) if p != target
    )
    return ControlPattern(width, target, pattern).to_gate()


def circuit_from_gray_path(path: GrayPath, label: str = "") -> Circuit:
    """Mirrored step-gate circuit realizing the transposition (g_1 g_m)."""
    if len(path) < 2:
        raise ValueError("need a path with at least two elements")
    steps = [
        _step_gate(path.width, a, b) for a, b in zip(path.elements, path.elements[1:])
    ]
    gates = steps + steps[-2::-1]
    if not label:
        label = f"swap {path.elements[0]}<->{path.elements[-1]}"
    return Circuit(path.width, tuple(gates), label)


def synth_two_point_swap(s: int, t: int, width: int) -> Circuit:
    """Circuit exchanging the amplitudes at basis indices s and t."""
    return circuit_from_gray_path(gray_path(s, t, width))
