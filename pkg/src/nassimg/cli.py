"""Command-line front end.

Commands:

  encode      image file -> JSON state dump (prints qubit count and norm)
  transform   state dump -> state dump, running a transform pipeline
  decode      state dump -> image file
  verify      check synthesized (or fixture) circuits against the oracle
              and the gate-count laws
  count       print gate counts for a pipeline without running it

Conventions worth knowing: for 2D images axis 1 is the row axis and axis 2
the column axis, so `flip:1` keeps rows in place and mirrors the columns.
Pipelines are `spec[*repeat]` stages joined by ';' (see the transform
mini-language in nassimg.transforms); `--repeat` multiplies every stage.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fileio
from .counting import CostModel, count_gates
from .gates import Circuit, circuit_from_dict
from .geometry import ImageGeometry, parse_geometry
from .oracle import EXHAUSTIVE_LIMIT, verify_transform
from .palette import ColorPalette
from .simulator import run
from .state import decode, encode
from .transforms import (
    TransformSpec,
    TranslationSpec,
    build_circuit,
    law_gate_counts,
    parse_pipeline,
    translation_stages,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


@dataclass
class PipelineConfig:
    """A parsed transform pipeline plus the knobs that shape its run."""

    geometry: ImageGeometry
    stages: list[tuple[TransformSpec, int]]
    cost_model: CostModel

    @classmethod
    def from_args(cls, geometry: ImageGeometry, args) -> "PipelineConfig":
        stages = parse_pipeline(args.pipeline)
        if args.repeat < 1:
            raise ValueError("--repeat must be >= 1")
        if args.repeat != 1:
            stages = [(spec, reps * args.repeat) for spec, reps in stages]
        return cls(geometry, stages, CostModel(alpha=args.cost_alpha))


def load_palette(selector: str) -> ColorPalette:
    """Resolve --palette: gray256, rgb24, or file:<path> with a color list."""
    selector = selector.strip()
    if selector == "gray256":
        return ColorPalette.gray256()
    if selector == "rgb24":
        return ColorPalette.rgb24()
    if selector.startswith("file:"):
        path = selector[len("file:") :]
        payload = json.loads(Path(path).read_text())
        colors = [tuple(c) if isinstance(c, list) else c for c in payload["colors"]]
        return ColorPalette.from_colors(colors, payload.get("palette_id", "custom"))
    raise ValueError(f"unknown palette {selector!r}; use gray256, rgb24, or file:<path>")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_encode(args) -> int:
    palette = load_palette(args.palette)
    geometry = parse_geometry(args.geometry) if args.geometry else None
    image = fileio.read_image(args.input, palette, geometry)
    state = encode(image, palette)
    fileio.write_state(args.out, state)
    print(f"qubits: {state.n}")
    print(f"norm: {state.norm():.15f}")
    print(f"state written to {args.out}")
    return EXIT_OK


def cmd_transform(args) -> int:
    state = fileio.read_state(args.state)
    config = PipelineConfig.from_args(state.geometry, args)
    report_rows = []
    for spec, repeats in config.stages:
        circuit = build_circuit(config.geometry, spec)
        counts = count_gates(circuit, config.cost_model)
        row = {"spec": spec.label(), "repeats": repeats, **counts.as_dict()}
        if isinstance(spec, TranslationSpec):
            row["swap_stages"] = len(translation_stages(config.geometry, spec.axis))
        report_rows.append(row)
        print(f"{spec.label()} x{repeats}: {counts.summary()}")
        for _ in range(repeats):
            state = run(circuit, state)
    fileio.write_state(args.out, state)
    print(f"state written to {args.out}")
    if args.report:
        Path(args.report).write_text(json.dumps(report_rows, indent=2) + "\n")
    return EXIT_OK


def cmd_decode(args) -> int:
    palette = load_palette(args.palette)
    state = fileio.read_state(args.state)
    image = decode(state, palette)
    fileio.write_image(args.out, image, palette)
    print(f"image written to {args.out}")
    return EXIT_OK


def _check_count_laws(geometry: ImageGeometry, spec: TransformSpec, cost_model: CostModel) -> list[str]:
    """Compare actual gate counts against the theorem-prescribed counts."""
    circuit = build_circuit(geometry, spec)
    counts = count_gates(circuit, cost_model)
    actual = {
        "singles": counts.singles,
        "controlled": counts.controlled,
        "multi_controlled": counts.multi_controlled,
        "swaps": counts.swaps,
    }
    if isinstance(spec, TranslationSpec):
        actual["stages"] = len(translation_stages(geometry, spec.axis))
    failures = []
    for key, expected in law_gate_counts(geometry, spec).items():
        if actual.get(key, 0) != expected:
            failures.append(f"{key}: expected {expected}, got {actual.get(key, 0)}")
    return failures


def cmd_verify(args) -> int:
    geometry = parse_geometry(args.geometry)
    stages = parse_pipeline(args.pipeline)
    cost_model = CostModel(alpha=args.cost_alpha)
    fixture: Circuit | None = None
    if args.circuit:
        fixture = circuit_from_dict(json.loads(Path(args.circuit).read_text()))
        if len(stages) != 1:
            raise ValueError("--circuit checks exactly one transform spec")
    all_ok = True
    for spec, _ in stages:
        report = verify_transform(
            geometry,
            spec,
            circuit=fixture,
            exhaustive_limit=args.exhaustive_limit,
            samples=args.samples,
        )
        print(report.describe())
        circuit = fixture if fixture is not None else build_circuit(geometry, spec)
        print(f"  counts: {count_gates(circuit, cost_model).summary()}")
        law_failures = [] if fixture is not None else _check_count_laws(geometry, spec, cost_model)
        for failure in law_failures:
            print(f"  count law violated - {failure}")
        if law_failures or not report.passed:
            all_ok = False
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_count(args) -> int:
    geometry = parse_geometry(args.geometry)
    cost_model = CostModel(alpha=args.cost_alpha)
    for spec, repeats in parse_pipeline(args.pipeline):
        circuit = build_circuit(geometry, spec)
        counts = count_gates(circuit, cost_model)
        suffix = f" x{repeats}" if repeats != 1 else ""
        print(f"{spec.label()}{suffix}: {counts.summary()}")
        if isinstance(spec, TranslationSpec):
            stages = translation_stages(geometry, spec.axis)
            print(f"  swap stages: {len(stages)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_pipeline_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--pipeline", required=True, help="transform specs, ';'-separated")
    sub.add_argument("--cost-alpha", type=float, default=16.0, help="elementary-cost knob")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nassimg",
        description=(
            "Amplitude-encode lattice images, run geometric-transform circuits "
            "on the exact state-vector simulator, and verify them against a "
            "classical pixel-permutation oracle. For 2D images axis 1 is the "
            "row axis and axis 2 the column axis."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("encode", help="image file -> JSON state dump")
    sub.add_argument("--in", dest="input", required=True, help="PPM/PNG or JSON lattice")
    sub.add_argument("--geometry", help="m1xm2x... (inferred for 2D rasters if omitted)")
    sub.add_argument("--palette", default="gray256", help="gray256 | rgb24 | file:<path>")
    sub.add_argument("--out", required=True, help="state dump path")
    sub.set_defaults(func=cmd_encode)

    sub = commands.add_parser("transform", help="run a transform pipeline on a state dump")
    sub.add_argument("--state", required=True, help="input state dump")
    _add_pipeline_args(sub)
    sub.add_argument("--repeat", type=int, default=1, help="extra repeat factor for every stage")
    sub.add_argument("--out", required=True, help="output state dump")
    sub.add_argument("--report", help="optional JSON gate-count report path")
    sub.set_defaults(func=cmd_transform)

    sub = commands.add_parser("decode", help="state dump -> image file")
    sub.add_argument("--state", required=True)
    sub.add_argument("--palette", default="gray256")
    sub.add_argument("--out", required=True, help="PPM/PNG (2D) or JSON lattice path")
    sub.set_defaults(func=cmd_decode)

    sub = commands.add_parser("verify", help="check circuits against the pixel oracle")
    sub.add_argument("--geometry", required=True)
    _add_pipeline_args(sub)
    sub.add_argument("--circuit", help="JSON circuit fixture to check instead of synthesizing")
    sub.add_argument("--exhaustive-limit", type=int, default=EXHAUSTIVE_LIMIT)
    sub.add_argument("--samples", type=int, default=10_000, help="basis samples beyond the limit")
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("count", help="print gate counts for a pipeline")
    sub.add_argument("--geometry", required=True)
    _add_pipeline_args(sub)
    sub.set_defaults(func=cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
