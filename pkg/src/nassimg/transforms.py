"""Builders for the structured image-transform circuits.

Five transforms are supported, each a pure basis permutation:

  * two-point swap          exchange the colors of two lattice points
  * symmetric flip          complement every axis except one fixed axis
  * local flip              flip only the half-lattice selected by one
                            control bit, preserving one axis
  * orthogonal rotation     quarter/half/three-quarter turn of the plane
                            spanned by two equal-width axes
  * translation             cyclic +1 shift of one axis coordinate

Each builder returns a :class:`~nassimg.gates.Circuit`; the induced pixel
permutation is the contract, checked against the coordinate-arithmetic
oracle in :mod:`nassimg.oracle`.

The text forms parsed by :func:`parse_transform` (also the CLI pipeline
syntax) are::

    flip:<j>
    lflip:<x>,<j>,<h>,<m>
    rot:<x>,<y>,<pi/2|pi|3pi/2>
    trans:<x>
    swap:(<v1>,...,<vk>),(<v1>,...,<vk>)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .gates import Circuit, ControlledGate, Gate, MultiControlledX, PAULI_X, SingleGate, SwapGate
from .geometry import ImageGeometry
from .graycode import synth_two_point_swap


class RotationAngle(Enum):
    """The three right-angle turns; no other angles are representable."""

    QUARTER = "pi/2"
    HALF = "pi"
    THREE_QUARTER = "3pi/2"

    @classmethod
    def parse(cls, text: str) -> "RotationAngle":
        try:
            return cls(text.strip().lower().replace(" ", ""))
        except ValueError:
            raise ValueError(
                f"bad rotation angle {text!r}; expected pi/2, pi, or 3pi/2"
            ) from None


# --- transform specs --------------------------------------------------------


@dataclass(frozen=True)
class TwoPointSwapSpec:
    """Swap the colors at two lattice coordinates."""

    point_s: tuple[int, ...]
    point_t: tuple[int, ...]

    def label(self) -> str:
        s = ",".join(str(v) for v in self.point_s)
        t = ",".join(str(v) for v in self.point_t)
        return f"swap:({s}),({t})"


@dataclass(frozen=True)
class SymmetricFlipSpec:
    """Complement every axis except ``fixed_axis``."""

    fixed_axis: int

    def label(self) -> str:
        return f"flip:{self.fixed_axis}"


@dataclass(frozen=True)
class LocalFlipSpec:
    """Conditional flip preserving ``preserved_axis``.

    The control reads bit ``bit`` (1-based within axis ``control_axis``) and
    fires where it equals ``polarity``.  Selected pixels have every axis
    except the preserved one complemented bitwise, the control bit itself
    excepted.  The preserved and control axes must differ.
    """

    preserved_axis: int
    control_axis: int
    bit: int
    polarity: int

    def __post_init__(self) -> None:
        if self.preserved_axis == self.control_axis:
            raise ValueError("preserved and control axes must differ")
        if self.polarity not in (0, 1):
            raise ValueError(f"polarity must be 0 or 1, got {self.polarity}")

    def label(self) -> str:
        return f"lflip:{self.preserved_axis},{self.control_axis},{self.bit},{self.polarity}"


@dataclass(frozen=True)
class RotationSpec:
    """Right-angle turn of the plane spanned by two equal-width axes."""

    axis_x: int
    axis_y: int
    angle: RotationAngle

    def label(self) -> str:
        return f"rot:{self.axis_x},{self.axis_y},{self.angle.value}"


@dataclass(frozen=True)
class TranslationSpec:
    """Cyclic +1 shift of one axis coordinate."""

    axis: int

    def label(self) -> str:
        return f"trans:{self.axis}"


TransformSpec = (
    TwoPointSwapSpec | SymmetricFlipSpec | LocalFlipSpec | RotationSpec | TranslationSpec
)


# --- circuit builders -------------------------------------------------------


def two_point_swap(geometry: ImageGeometry, spec: TwoPointSwapSpec) -> Circuit:
    s = geometry.index_of(spec.point_s)
    t = geometry.index_of(spec.point_t)
    if s == t:
        raise ValueError("the two swapped points must differ")
    circuit = synth_two_point_swap(s, t, geometry.n)
    return Circuit(circuit.width, circuit.gates, spec.label())


def symmetric_flip(geometry: ImageGeometry, fixed_axis: int) -> Circuit:
    """X on every qubit outside the fixed axis: n - m_j single-qubit gates."""
    first, last = geometry.axis_span(fixed_axis)
    gates: list[Gate] = [
        SingleGate(q, PAULI_X)
        for q in range(1, geometry.n + 1)
        if not first <= q <= last
    ]
    return Circuit(geometry.n, tuple(gates), SymmetricFlipSpec(fixed_axis).label())


def local_flip(geometry: ImageGeometry, spec: LocalFlipSpec) -> Circuit:
    """Controlled X on every qubit outside the preserved axis, bar the control.

    Exactly n - 1 - m_x gates, all sharing the one control qubit.
    """
    if not 1 <= spec.bit <= geometry.axis_width(spec.control_axis):
        raise ValueError(
            f"control bit {spec.bit} out of range for axis "
            f"{spec.control_axis} of width {geometry.axis_width(spec.control_axis)}"
        )
    control = geometry.axis_span(spec.control_axis)[0] + spec.bit - 1
    x_first, x_last = geometry.axis_span(spec.preserved_axis)
    gates: list[Gate] = [
        ControlledGate(control, spec.polarity, q, PAULI_X)
        for q in range(1, geometry.n + 1)
        if q != control and not x_first <= q <= x_last
    ]
    return Circuit(geometry.n, tuple(gates), spec.label())


def orthogonal_rotation(
    geometry: ImageGeometry, axis_x: int, axis_y: int, angle: RotationAngle
) -> Circuit:
    """Swap-and-complement realization of the three right-angle turns.

    Qubit p of one axis pairs with qubit p of the other; the per-angle gate
    budget is m swaps + m X (quarter turns) or 2m X (half turn).
    """
    if axis_x == axis_y:
        raise ValueError("rotation plane needs two distinct axes")
    mx = geometry.axis_width(axis_x)
    my = geometry.axis_width(axis_y)
    if mx != my:
        raise ValueError(f"rotation axes must have equal widths, got {mx} and {my}")
    x_first, _ = geometry.axis_span(axis_x)
    y_first, _ = geometry.axis_span(axis_y)
    gates: list[Gate] = []
    if angle is RotationAngle.HALF:
        gates += [SingleGate(x_first + p, PAULI_X) for p in range(mx)]
        gates += [SingleGate(y_first + p, PAULI_X) for p in range(mx)]
    else:
        gates += [SwapGate(x_first + p, y_first + p) for p in range(mx)]
        flipped = y_first if angle is RotationAngle.QUARTER else x_first
        gates += [SingleGate(flipped + p, PAULI_X) for p in range(mx)]
    return Circuit(geometry.n, tuple(gates), RotationSpec(axis_x, axis_y, angle).label())


def _shift_gate(gate: Gate, offset: int) -> Gate:
    if isinstance(gate, MultiControlledX):
        return MultiControlledX(
            gate.target + offset, tuple((p + offset, b) for p, b in gate.controls)
        )
    raise TypeError(f"cannot embed gate type {type(gate).__name__}")


def translation_stages(geometry: ImageGeometry, axis: int) -> list[Circuit]:
    """The 2^m - 1 two-point swap subcircuits of a +1 translation.

    Stage circuits exchange the axis values 2^m-1 <-> 0, then 2^m-2 <-> 2^m-1,
    down to 1 <-> 2.  Each is synthesized over the m qubits of the axis and
    embedded at the axis block, so controls never leave the axis and all
    other qubits are untouched.
    """
    m = geometry.axis_width(axis)
    offset = geometry.axis_span(axis)[0] - 1
    top = (1 << m) - 1
    pairs = [(top, 0)] + [(v, v + 1) for v in range(top - 1, 0, -1)]
    stages = []
    for a, b in pairs:
        inner = synth_two_point_swap(a, b, m)
        gates = tuple(_shift_gate(g, offset) for g in inner.gates)
        stages.append(Circuit(geometry.n, gates, f"trans:{axis} stage {a}<->{b}"))
    return stages


def translation(geometry: ImageGeometry, axis: int) -> Circuit:
    """Concatenation of the translation stages: axis value v -> v+1 mod 2^m."""
    gates: list[Gate] = []
    for stage in translation_stages(geometry, axis):
        gates.extend(stage.gates)
    return Circuit(geometry.n, tuple(gates), TranslationSpec(axis).label())


def law_gate_counts(geometry: ImageGeometry, spec: TransformSpec) -> dict[str, int]:
    """Gate counts each builder is obligated to hit, keyed by gate kind.

    Two-point swaps emit 2d-1 multi-controlled gates (d = Hamming distance);
    flips n - m_j X gates; local flips n - 1 - m_x controlled gates; quarter
    turns m swaps + m X, half turns 2m X; translations 2^m - 1 swap stages.
    """
    n = geometry.n
    if isinstance(spec, TwoPointSwapSpec):
        s = geometry.index_of(spec.point_s)
        t = geometry.index_of(spec.point_t)
        d = bin(s ^ t).count("1")
        return {"multi_controlled": 2 * d - 1}
    if isinstance(spec, SymmetricFlipSpec):
        return {"singles": n - geometry.axis_width(spec.fixed_axis)}
    if isinstance(spec, LocalFlipSpec):
        return {"controlled": n - 1 - geometry.axis_width(spec.preserved_axis)}
    if isinstance(spec, RotationSpec):
        m = geometry.axis_width(spec.axis_x)
        if spec.angle is RotationAngle.HALF:
            return {"singles": 2 * m}
        return {"swaps": m, "singles": m}
    if isinstance(spec, TranslationSpec):
        return {"stages": (1 << geometry.axis_width(spec.axis)) - 1}
    raise TypeError(f"unknown transform spec {type(spec).__name__}")


def build_circuit(geometry: ImageGeometry, spec: TransformSpec) -> Circuit:
    """Dispatch a transform spec to its builder."""
    if isinstance(spec, TwoPointSwapSpec):
        return two_point_swap(geometry, spec)
    if isinstance(spec, SymmetricFlipSpec):
        return symmetric_flip(geometry, spec.fixed_axis)
    if isinstance(spec, LocalFlipSpec):
        return local_flip(geometry, spec)
    if isinstance(spec, RotationSpec):
        return orthogonal_rotation(geometry, spec.axis_x, spec.axis_y, spec.angle)
    if isinstance(spec, TranslationSpec):
        return translation(geometry, spec.axis)
    raise TypeError(f"unknown transform spec {type(spec).__name__}")


# --- the transform mini-language --------------------------------------------

_SWAP_RE = re.compile(r"^\(([^()]*)\),\(([^()]*)\)$")


def _parse_coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad coordinate list {text!r}") from None


def parse_transform(text: str) -> TransformSpec:
    """Parse one transform spec written in the mini-language."""
    head, sep, rest = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bad transform spec {text!r}; expected '<kind>:<args>'")
    kind = head.strip().lower()
    rest = rest.strip()
    try:
        if kind == "flip":
            return SymmetricFlipSpec(int(rest))
        if kind == "lflip":
            x, j, h, m = (int(p) for p in rest.split(","))
            return LocalFlipSpec(x, j, h, m)
        if kind == "rot":
            x, y, angle = rest.split(",", 2)
            return RotationSpec(int(x), int(y), RotationAngle.parse(angle))
        if kind == "trans":
            return TranslationSpec(int(rest))
        if kind == "swap":
            match = _SWAP_RE.match(rest.replace(" ", ""))
            if not match:
                raise ValueError("expected swap:(v1,...),(v1,...)")
            return TwoPointSwapSpec(_parse_coords(match.group(1)), _parse_coords(match.group(2)))
    except ValueError as exc:
        raise ValueError(f"bad transform spec {text!r}: {exc}") from None
    raise ValueError(f"unknown transform kind {kind!r} in {text!r}")


def parse_pipeline(text: str) -> list[tuple[TransformSpec, int]]:
    """Parse 'spec[*repeat];spec...' into (spec, repeat) stages."""
    stages = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        body, star, repeat_text = part.rpartition("*")
        if star and body:
            try:
                repeat = int(repeat_text)
            except ValueError:
                raise ValueError(f"bad repeat count in {part!r}") from None
            if repeat < 1:
                raise ValueError(f"repeat count must be >= 1 in {part!r}")
            stages.append((parse_transform(body), repeat))
        else:
            stages.append((parse_transform(part), 1))
    if not stages:
        raise ValueError("empty pipeline")
    return stages
