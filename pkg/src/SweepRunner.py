#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Sweep Runner module.

This module evaluates g2(0), its amplitude-method estimate and the optimal pump
over one- or two-dimensional parameter grids and assembles the results into a
table in grid order.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from colorama import Fore, Style
from tqdm import tqdm

from src.amplitude import g2_zero_analytic, steady_amplitudes
from src.correlations import g2_zero
from src.errors import InvalidParams, UPBError
from src.info import NAME, VERSION
from src.liouvillian import build_liouvillian, steady_state, truncation_weight
from src.model import SystemParams, build_hamiltonian, build_operators, collapse_operators
from src.optimal import optimal_pump
from src.utils import format_number, status

AXIS_PARAMETERS = ("delta", "phi", "chi", "lambda", "omega", "gamma")
QUANTITIES = ("g2_numeric", "g2_analytic", "lambda_opt", "phi_opt")
LOG_FLOOR = 1e-30

QUANTITY_COLUMNS = {
    "g2_numeric": ("g2_numeric", "log10_g2_numeric"),
    "g2_analytic": ("g2_analytic", "log10_g2_analytic"),
    "lambda_opt": ("lambda_opt_over_kappa",),
    "phi_opt": ("phi_opt_over_pi",),
}


@dataclass(frozen=True)
class SweepAxis:
    """Linearly spaced axis over one named parameter."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.name not in AXIS_PARAMETERS:
            raise InvalidParams(f"unknown sweep parameter '{self.name}', use one of {', '.join(AXIS_PARAMETERS)}")
        if self.count < 2:
            raise InvalidParams(f"axis '{self.name}' needs at least 2 points, got {self.count}")
        if self.start == self.stop:
            raise InvalidParams(f"axis '{self.name}' has start equal to stop")

    @property
    def column(self) -> str:
        return "phi_over_pi" if self.name == "phi" else f"{self.name}_over_kappa"

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    def describe(self) -> str:
        return f"{self.name},{format_number(self.start)},{format_number(self.stop)},{self.count}"


@dataclass(frozen=True)
class SweepSpec:
    """
    A parameter sweep.

    ``use_optimal_pump`` recomputes the optimal gain and phase at every grid
    point; otherwise the pump in ``base`` is held fixed.
    """

    base: SystemParams
    axis1: SweepAxis
    axis2: Optional[SweepAxis] = None
    quantities: Tuple[str, ...] = ("g2_numeric",)
    use_optimal_pump: bool = False

    def __post_init__(self):
        unknown = [q for q in self.quantities if q not in QUANTITIES]
        if unknown:
            raise InvalidParams(f"unknown quantities {unknown}, use any of {', '.join(QUANTITIES)}")
        if self.axis2 is not None and self.axis2.name == self.axis1.name:
            raise InvalidParams("both sweep axes refer to the same parameter")

    @property
    def axes(self) -> List[SweepAxis]:
        return [self.axis1] if self.axis2 is None else [self.axis1, self.axis2]

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(axis.count for axis in self.axes)

    def columns(self) -> List[str]:
        out = [axis.column for axis in self.axes]
        for quantity in QUANTITIES:
            if quantity in self.quantities:
                out.extend(QUANTITY_COLUMNS[quantity])
        return out + ["error_code"]


@dataclass
class ResultTable:
    """
    Rows of real values in grid order.

    The last column, ``error_code``, is 0 for points that evaluated cleanly and
    the code of the first error otherwise; cells of a failed quantity hold 0.
    """

    columns: List[str]
    rows: List[List[float]]
    metadata: Dict[str, str] = field(default_factory=dict)
    shape: Tuple[int, ...] = ()

    def column(self, name: str) -> np.ndarray:
        return np.array([row[self.columns.index(name)] for row in self.rows], dtype=float)

    @property
    def failures(self) -> int:
        if "error_code" not in self.columns:
            return 0
        return int(np.count_nonzero(self.column("error_code")))


def point_params(spec: SweepSpec, coordinates: Sequence[float]) -> SystemParams:
    """System parameters at one grid point."""
    changes = {}
    for axis, value in zip(spec.axes, coordinates):
        if axis.name == "delta":
            changes.update(delta_c=value, delta_a=value)
        elif axis.name == "lambda":
            changes["lam"] = value
        else:
            changes[axis.name] = value
    return spec.base.replace(**changes)


def numeric_g2(params: SystemParams) -> float:
    """Steady-state g2(0) from the full master equation."""
    ops = build_operators(params)
    L = build_liouvillian(build_hamiltonian(params, ops), collapse_operators(params, ops))
    return g2_zero(steady_state(L), ops)


def log10_clamped(value: float) -> float:
    """log10 with values below 1e-30 clamped to -30."""
    return math.log10(max(value, LOG_FLOOR))


def evaluate_point(task: Tuple[SweepSpec, Tuple[float, ...]]) -> List[float]:
    """
    Evaluate the requested quantities at one grid point.

    Errors are recorded, never raised: failed cells hold 0 and the last entry is
    the code of the first error.
    """
    spec, coordinates = task
    values: Dict[str, float] = {}
    error_code = 0

    try:
        params = point_params(spec, coordinates)
    except UPBError as e:
        params, error_code = None, e.code

    wants_pump = spec.use_optimal_pump or "lambda_opt" in spec.quantities or "phi_opt" in spec.quantities
    if params is not None and wants_pump:
        try:
            pump = optimal_pump(params)
            values["lambda_opt_over_kappa"] = pump.lambda_opt
            values["phi_opt_over_pi"] = pump.phi_opt / math.pi
            if spec.use_optimal_pump:
                params = pump.apply(params)
        except UPBError as e:
            error_code = e.code
            if spec.use_optimal_pump:
                params = None

    if params is not None:
        for quantity in ("g2_numeric", "g2_analytic"):
            if quantity not in spec.quantities:
                continue
            try:
                if quantity == "g2_numeric":
                    g2 = numeric_g2(params)
                else:
                    g2 = g2_zero_analytic(steady_amplitudes(params))
                values[quantity] = g2
                values[f"log10_{quantity}"] = log10_clamped(g2)
            except UPBError as e:
                error_code = error_code or e.code

    row = [c / math.pi if axis.name == "phi" else c for axis, c in zip(spec.axes, coordinates)]
    for name in spec.columns()[len(spec.axes):-1]:
        row.append(float(values.get(name, 0.0)))
    row.append(float(error_code))
    return row


def grid(spec: SweepSpec) -> List[Tuple[float, ...]]:
    """Grid coordinates, first axis slowest."""
    return [tuple(float(v) for v in point) for point in itertools.product(*(axis.values() for axis in spec.axes))]


def params_metadata(params: SystemParams, reproducible: bool = False) -> Dict[str, str]:
    """Tool version, unit convention, timestamp and the full parameter set."""
    metadata = {
        "tool": f"{NAME} {VERSION}",
        "units": "kappa = 1; rates over kappa, phases over pi, times in 1/kappa",
    }
    if not reproducible:
        metadata["created"] = datetime.now().strftime('%Y-%m-%d %H:%M:%S')

    for key, value in params.as_dict().items():
        metadata[key] = format_number(value) if isinstance(value, float) else str(value)
    return metadata


def sweep_metadata(spec: SweepSpec, reproducible: bool = False) -> Dict[str, str]:
    """Metadata block: parameters of the base point, axes and requested quantities."""
    metadata = params_metadata(spec.base, reproducible)

    for i, axis in enumerate(spec.axes, 1):
        metadata[f"axis{i}"] = axis.describe()
    metadata["quantities"] = ",".join(q for q in QUANTITIES if q in spec.quantities)
    metadata["use_optimal_pump"] = str(spec.use_optimal_pump).lower()

    try:
        ops = build_operators(spec.base)
        L = build_liouvillian(build_hamiltonian(spec.base, ops), collapse_operators(spec.base, ops))
        metadata["base_top_level_population"] = f"{truncation_weight(steady_state(L), ops):.3e}"
    except UPBError as e:
        metadata["base_top_level_population"] = f"unavailable ({type(e).__name__})"

    return metadata


def run_sweep(spec: SweepSpec, workers: int = 1, progress: bool = True, reproducible: bool = False) -> ResultTable:
    """
    Evaluate a sweep.

    Points are independent; with ``workers`` > 1 they are spread over a process
    pool and reassembled in grid order, so results do not depend on scheduling.

    Args:
        spec: Sweep definition
        workers: Number of worker processes
        progress: Show a progress bar
        reproducible: Omit the timestamp from the metadata

    Returns:
        ResultTable: One row per grid point
    """
    points = grid(spec)
    tasks = [(spec, point) for point in points]

    if progress:
        status("🚀", "Sweeping", f"{' x '.join(str(n) for n in spec.shape)} points on {workers} worker(s)")

    bar = tqdm(total=len(tasks), leave=False, disable=not progress, unit="pt")
    rows = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunk = max(1, len(tasks) // (workers * 8))
            for row in executor.map(evaluate_point, tasks, chunksize=chunk):
                rows.append(row)
                bar.update()
    else:
        for task in tasks:
            rows.append(evaluate_point(task))
            bar.update()
    bar.close()

    table = ResultTable(
        columns=spec.columns(),
        rows=rows,
        metadata=sweep_metadata(spec, reproducible),
        shape=spec.shape,
    )

    if progress:
        color = Fore.RED if table.failures else Fore.LIGHTGREEN_EX
        print(f"✅ {Fore.LIGHTBLUE_EX}| points | failed |{Style.RESET_ALL}")
        print(f"   | {Fore.GREEN}{len(rows): 6} | {color}{table.failures: 6} |{Style.RESET_ALL}")

    return table


def locate_minimum(table: ResultTable, column: str) -> Tuple[Tuple[float, ...], float]:
    """
    Grid coordinates and value of the smallest clean entry of ``column``.

    Returns:
        Tuple: (axis coordinates as written in the table, minimum value)
    """
    values = table.column(column)
    clean = table.column("error_code") == 0 if "error_code" in table.columns else np.ones(len(values), bool)
    if not np.any(clean):
        raise InvalidParams(f"no clean entries in column '{column}'")

    index = int(np.argmin(np.where(clean, values, np.inf)))
    coordinates = tuple(table.rows[index][: len(table.shape)])
    return coordinates, float(values[index])
