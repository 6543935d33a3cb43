"""Gate tallies and elementary-cost estimates.

A circuit's exact gate counts are reported per kind, with multi-controlled
gates additionally broken down by control count.  The elementary-cost
estimate prices each gate under a pluggable linear model:

  * gates with 0 or 1 controls cost 1;
  * a multi-controlled X touching w = c + 1 qubits costs alpha * w,
    reflecting that such a gate lowers to a number of one- and two-qubit
    gates linear in its width (alpha defaults to 16);
  * a swap counts as its three controlled-NOT lowering, cost 3.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .gates import Circuit, ControlledGate, Gate, MultiControlledX, SingleGate, SwapGate

SWAP_LOWERING_CNOTS = 3


@dataclass(frozen=True)
class CostModel:
    """Width-linear pricing of multi-controlled gates, knob ``alpha``."""

    alpha: float = 16.0

    def multi_controlled_cost(self, n_controls: int) -> float:
        if n_controls <= 1:
            return 1.0
        return self.alpha * (n_controls + 1)

    def gate_cost(self, gate: Gate) -> float:
        if isinstance(gate, (SingleGate, ControlledGate)):
            return 1.0
        if isinstance(gate, MultiControlledX):
            return self.multi_controlled_cost(len(gate.controls))
        if isinstance(gate, SwapGate):
            return float(SWAP_LOWERING_CNOTS)
        raise TypeError(f"unknown gate type {type(gate).__name__}")


@dataclass
class GateCountReport:
    """Per-kind tallies plus the modeled elementary cost of one circuit."""

    singles: int = 0
    controlled: int = 0
    multi_controlled: int = 0
    swaps: int = 0
    mcx_by_controls: dict[int, int] = field(default_factory=dict)
    elementary_cost: float = 0.0

    @property
    def total_gates(self) -> int:
        return self.singles + self.controlled + self.multi_controlled + self.swaps

    def as_dict(self) -> dict:
        return {
            "singles": self.singles,
            "controlled": self.controlled,
            "multi_controlled": self.multi_controlled,
            "swaps": self.swaps,
            "mcx_by_controls": {str(c): k for c, k in sorted(self.mcx_by_controls.items())},
            "total_gates": self.total_gates,
            "elementary_cost": self.elementary_cost,
        }

    def summary(self) -> str:
        parts = [
            f"gates={self.total_gates}",
            f"single={self.singles}",
            f"controlled={self.controlled}",
            f"multi_controlled={self.multi_controlled}",
            f"swap={self.swaps}",
            f"elementary~{self.elementary_cost:g}",
        ]
        return " ".join(parts)


def count_gates(circuit: Circuit, cost_model: CostModel | None = None) -> GateCountReport:
    """Tally a circuit's gates and price them under ``cost_model``."""
    model = cost_model if cost_model is not None else CostModel()
    report = GateCountReport()
    for gate in circuit.gates:
        report.elementary_cost += model.gate_cost(gate)
        if isinstance(gate, SingleGate):
            report.singles += 1
        elif isinstance(gate, ControlledGate):
            report.controlled += 1
        elif isinstance(gate, MultiControlledX):
            report.multi_controlled += 1
            c = len(gate.controls)
            report.mcx_by_controls[c] = report.mcx_by_controls.get(c, 0) + 1
        elif isinstance(gate, SwapGate):
            report.swaps += 1
        else:
            raise TypeError(f"unknown gate type {type(gate).__name__}")
    return report
