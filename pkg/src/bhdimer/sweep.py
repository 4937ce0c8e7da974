"""Parameter sweeps, phase labels, crossing reports and CSV emission.

Grid points are independent tasks; evaluation may fan out over worker
threads, but rows are always assembled and emitted in grid order, so a
sweep's CSV is byte-identical regardless of the worker count.
"""

from __future__ import annotations

import math
import string
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .entanglement import classify_negativity, negativity
from .errors import DomainError
from .params import ModelParams
from .spectrum import (
    COUPLED_LABELS,
    CrossingReport,
    find_crossings,
    ground_state_label,
    level_energies,
)
from .thermo import heat_capacity, internal_energy, partition_function

PARAM_NAMES = ("tau", "gamma", "omega", "temperature")

#: Recognized sweep outputs, in the canonical CSV column order.
OUTPUT_NAMES = (
    "negativity",
    "heat_capacity",
    "internal_energy",
    "partition_function",
    "spectrum",
    "ground_label",
)

_THERMAL_OUTPUTS = frozenset(
    {"negativity", "heat_capacity", "internal_energy", "partition_function"}
)

_ENERGY_COLUMNS = tuple(f"E_{lab.j}_{lab.m}" for lab in COUPLED_LABELS)


def _format_value(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    # 17 significant digits round-trips every double exactly.
    return format(float(value), ".17g")


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional grid over a model parameter.

    ``variable`` names the swept parameter, ``fixed`` holds the other three,
    and ``outputs`` selects what is evaluated per grid point (normalized to
    the canonical order).
    """

    variable: str
    start: float
    stop: float
    steps: int
    fixed: Mapping[str, float]
    outputs: tuple[str, ...] = ("negativity",)

    def __post_init__(self) -> None:
        if self.variable not in PARAM_NAMES:
            raise ValueError(f"variable must be one of {PARAM_NAMES}, got {self.variable!r}")
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("start and stop must be finite")
        if not self.start < self.stop:
            raise ValueError(f"start must be < stop, got [{self.start}, {self.stop}]")

        expected = set(PARAM_NAMES) - {self.variable}
        if set(self.fixed) != expected:
            raise ValueError(
                f"fixed must supply exactly {sorted(expected)}, got {sorted(self.fixed)}"
            )
        object.__setattr__(self, "fixed", dict(self.fixed))

        unknown = [name for name in self.outputs if name not in OUTPUT_NAMES]
        if unknown or not self.outputs:
            raise ValueError(
                f"outputs must be a non-empty subset of {OUTPUT_NAMES}, got {self.outputs!r}"
            )
        ordered = tuple(name for name in OUTPUT_NAMES if name in set(self.outputs))
        object.__setattr__(self, "outputs", ordered)

        if _THERMAL_OUTPUTS & set(ordered):
            if self.variable == "temperature":
                if self.start <= 0:
                    raise ValueError("thermal outputs require every temperature > 0")
            elif self.fixed["temperature"] <= 0:
                raise ValueError("thermal outputs require fixed temperature > 0")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    def point(self, value: float) -> ModelParams:
        kwargs = dict(self.fixed)
        kwargs[self.variable] = float(value)
        return ModelParams(**kwargs)

    def columns(self) -> tuple[str, ...]:
        cols: list[str] = list(PARAM_NAMES)
        for name in self.outputs:
            if name == "spectrum":
                cols.extend(_ENERGY_COLUMNS)
            else:
                cols.append(name)
        if "negativity" in self.outputs:
            cols.append("phase")
        return tuple(cols)


@dataclass(frozen=True)
class SweepResult:
    """Grid-ordered rows of a sweep, one tuple per grid point."""

    spec: SweepSpec
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def to_csv_text(self) -> str:
        lines = [",".join(self.columns)]
        lines.extend(",".join(_format_value(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def write_csv(self, path: str) -> None:
        write_text(path, self.to_csv_text())


def write_text(path: str, text: str) -> None:
    """Write text to a file or to stdout when path is '-'; LF line endings."""
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _evaluate_row(spec: SweepSpec, value: float, index: int) -> tuple:
    p = spec.point(value)
    row: list = [p.tau, p.gamma, p.omega, p.temperature]
    phase: str | None = None
    for name in spec.outputs:
        if name == "negativity":
            n = negativity(p).negativity
            row.append(n)
            phase = classify_negativity(n)
        elif name == "heat_capacity":
            row.append(heat_capacity(p))
        elif name == "internal_energy":
            row.append(internal_energy(p))
        elif name == "partition_function":
            row.append(float(partition_function(p)))
        elif name == "spectrum":
            row.extend(float(e) for e in level_energies(p))
        elif name == "ground_label":
            row.append(str(ground_state_label(p)))
    if phase is not None:
        row.append(phase)

    for col, v in zip(spec.columns(), row):
        if isinstance(v, float) and not math.isfinite(v):
            raise DomainError(
                f"non-finite {col} at grid index {index} "
                f"(tau={p.tau}, gamma={p.gamma}, omega={p.omega}, T={p.temperature})"
            )
    return tuple(row)


def run_sweep(spec: SweepSpec, *, workers: int = 1) -> SweepResult:
    """Evaluate the sweep grid; rows come back in grid order.

    Each grid point is a pure function of its parameters, so any worker
    count produces identical rows.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    values = spec.grid()
    if workers == 1:
        rows = [_evaluate_row(spec, v, i) for i, v in enumerate(values)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(
                pool.map(lambda item: _evaluate_row(spec, item[1], item[0]), enumerate(values))
            )
    return SweepResult(spec=spec, columns=spec.columns(), rows=tuple(rows))


def levels_table(
    gamma: float,
    omega: float,
    start: float,
    stop: float,
    steps: int,
) -> tuple[tuple[str, ...], tuple[tuple, ...]]:
    """Tau grid of all nine level energies (columns per label)."""
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if not start < stop:
        raise ValueError(f"start must be < stop, got [{start}, {stop}]")
    columns = ("tau",) + _ENERGY_COLUMNS
    rows = []
    for tau in np.linspace(start, stop, steps):
        p = ModelParams(tau=float(tau), gamma=gamma, omega=omega)
        rows.append((float(tau),) + tuple(float(e) for e in level_energies(p)))
    return columns, tuple(rows)


def levels_csv_text(gamma: float, omega: float, start: float, stop: float, steps: int) -> str:
    columns, rows = levels_table(gamma, omega, start, stop, steps)
    lines = [",".join(columns)]
    lines.extend(",".join(_format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def format_crossing_report(report: CrossingReport) -> str:
    """Human-readable crossing report; values printed round-trip exact."""
    g = _format_value
    lines = [
        f"ground-state crossings for gamma={g(report.gamma)} omega={g(report.omega)} "
        f"tau in [{g(report.tau_range[0])}, {g(report.tau_range[1])}]"
    ]
    names = string.ascii_uppercase
    for i, c in enumerate(report.crossings):
        name = names[i] if i < len(names) else str(i + 1)
        lines.append(
            f"crossing {name}: tau = {g(c.tau)}  energy = {g(c.energy)}  "
            f"ground label {c.label_below} -> {c.label_above}  "
            f"bracket [{g(c.bracket[0])}, {g(c.bracket[1])}]  "
            f"residual gap = {g(c.residual_gap)}"
        )
    lines.append(
        "ground-label sequence: " + " -> ".join(str(lab) for lab in report.label_sequence)
    )
    return "\n".join(lines) + "\n"


def report_crossings(
    gamma: float,
    omega: float,
    tau_range: tuple[float, float],
    **kwargs,
) -> str:
    """Locate crossings and format the report; propagates the no-crossing error."""
    return format_crossing_report(find_crossings(gamma, omega, tau_range, **kwargs))
