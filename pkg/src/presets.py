#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Figure presets.

Each preset runs the sweeps behind one figure panel and returns a mapping from
curve label to result table. The parametric pump is held at the optimum of
the design detuning (Delta = +-kappa or kappa, 2 kappa), except for the
coupling sweep of fig6a, which re-optimizes at every point.

Panel naming of fig6 follows the four-panel reading: fig6b is the uncoupled
cavity-driven case, fig6c cavity-driven and fig6d atom-driven at chi = 1.5.
"""

import math
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Tuple

from src.correlations import default_tau_grid, g2_tau_for_params
from src.errors import UnknownPreset
from src.model import Drive, SystemParams
from src.optimal import optimal_pump
from src.SweepRunner import ResultTable, SweepAxis, SweepSpec, params_metadata, run_sweep
from src.utils import format_number, status

Tables = Dict[str, ResultTable]

WEAK_DRIVE = SystemParams(chi=1.0 / math.sqrt(2.0), gamma=0.1, omega=0.005)
STRONG_COUPLING = SystemParams(chi=1.5, gamma=0.1, omega=0.04)

DETUNING_AXIS = SweepAxis("delta", -3.0, 3.0, 301)
PHASE_AXIS = SweepAxis("phi", -math.pi, math.pi, 201)
COUPLING_AXIS = SweepAxis("chi", 0.05, 3.0, 241)

FIG6D_NOTE = "atom-driven optimum at Delta = kappa is lambda = 1.249e-3, not 1.249e-2"


def designed(params: SystemParams, delta: float) -> SystemParams:
    """Params at detuning ``delta`` with the optimal pump for that detuning."""
    at_delta = params.with_detuning(delta)
    return optimal_pump(at_delta).apply(at_delta)


def _resized(axis: SweepAxis, points: Optional[int]) -> SweepAxis:
    return axis if points is None else replace(axis, count=points)


class PresetRunner:
    """
    Runs figure presets with shared settings.

    Args:
        n_max: Fock truncation
        workers: Worker processes per sweep
        progress: Print progress
        reproducible: Omit timestamps from metadata
        points: Override the number of points on every axis
    """

    def __init__(
        self,
        n_max: int = 10,
        workers: int = 1,
        progress: bool = True,
        reproducible: bool = False,
        points: Optional[int] = None,
    ):
        self.n_max = n_max
        self.workers = workers
        self.progress = progress
        self.reproducible = reproducible
        self.points = points

        self.presets: Dict[str, Callable[[], Tables]] = {
            "fig3a": lambda: self.detuning_curves(WEAK_DRIVE.replace(drive=Drive.CAVITY), (1.0, -1.0)),
            "fig3b": lambda: self.phase_map(WEAK_DRIVE.replace(drive=Drive.CAVITY)),
            "fig4a": lambda: self.detuning_curves(WEAK_DRIVE.replace(drive=Drive.ATOM), (1.0, -1.0)),
            "fig4b": lambda: self.phase_map(WEAK_DRIVE.replace(drive=Drive.ATOM)),
            "fig5": self.delayed_correlations,
            "fig6a": self.coupling_curves,
            "fig6b": lambda: self.detuning_curves(STRONG_COUPLING.replace(chi=0.0, drive=Drive.CAVITY), (1.0, 2.0)),
            "fig6c": lambda: self.detuning_curves(STRONG_COUPLING.replace(drive=Drive.CAVITY), (1.0, 2.0)),
            "fig6d": lambda: self.detuning_curves(
                STRONG_COUPLING.replace(drive=Drive.ATOM), (1.0, 2.0), note=FIG6D_NOTE
            ),
        }

    @property
    def names(self) -> List[str]:
        return list(self.presets)

    def run(self, name: str) -> Tables:
        """
        Run the preset ``name``.

        Raises:
            UnknownPreset: If no preset has that name
        """
        if name not in self.presets:
            raise UnknownPreset(f"unknown preset '{name}', available: {', '.join(self.presets)}")

        if self.progress:
            status("🔍", "Preset", name)
        tables = self.presets[name]()
        for label, table in tables.items():
            table.metadata["preset"] = name
            table.metadata["curve"] = label
        return tables

    def _base(self, params: SystemParams) -> SystemParams:
        return params.replace(n_max=self.n_max)

    def _sweep(self, spec: SweepSpec, design: Optional[SystemParams] = None, note: str = "") -> ResultTable:
        table = run_sweep(spec, self.workers, self.progress, self.reproducible)
        if design is not None:
            table.metadata["design_delta"] = format_number(design.delta_c)
            table.metadata["design_lambda"] = format_number(design.lam)
            table.metadata["design_phi_over_pi"] = format_number(design.phi / math.pi)
        if note:
            table.metadata["note"] = note
        return table

    def detuning_curves(self, params: SystemParams, design_deltas: Tuple[float, ...], note: str = "") -> Tables:
        """g2(0) versus detuning, pump held at the optimum of each design detuning."""
        tables = {}
        for delta in design_deltas:
            design = designed(self._base(params), delta)
            spec = SweepSpec(
                base=design,
                axis1=_resized(DETUNING_AXIS, self.points),
                quantities=("g2_numeric", "g2_analytic"),
            )
            tables[_delta_label(delta, design_deltas)] = self._sweep(spec, design, note)
        return tables

    def phase_map(self, params: SystemParams) -> Tables:
        """log10 g2(0) over (detuning, phase) with the gain of the Delta = kappa optimum."""
        design = designed(self._base(params), 1.0)
        spec = SweepSpec(
            base=design,
            axis1=_resized(DETUNING_AXIS, self.points),
            axis2=_resized(PHASE_AXIS, self.points),
            quantities=("g2_numeric",),
        )
        return {"map": self._sweep(spec, design)}

    def coupling_curves(self) -> Tables:
        """Optimum g2(0) versus coupling for both drives at Delta = kappa, 2 kappa."""
        tables = {}
        for drive in (Drive.CAVITY, Drive.ATOM):
            for delta in (1.0, 2.0):
                base = self._base(STRONG_COUPLING.replace(drive=drive)).with_detuning(delta)
                spec = SweepSpec(
                    base=base,
                    axis1=_resized(COUPLING_AXIS, self.points),
                    quantities=("g2_numeric", "lambda_opt", "phi_opt"),
                    use_optimal_pump=True,
                )
                tables[f"{drive.value}_delta{delta:g}"] = self._sweep(spec)
        return tables

    def delayed_correlations(self) -> Tables:
        """g2(tau) for both drives at the Delta = +-kappa optima."""
        grid = default_tau_grid(50.0, self.points or 1001)
        tables = {}
        for drive in (Drive.CAVITY, Drive.ATOM):
            for delta in (1.0, -1.0):
                design = designed(self._base(WEAK_DRIVE.replace(drive=drive)), delta)
                if self.progress:
                    status("🚀", "g2(tau)", f"{drive.value}, delta = {delta:+g}")
                series = g2_tau_for_params(design, grid)
                table = series.to_table()
                table.metadata = {**params_metadata(design, self.reproducible), **table.metadata}
                table.metadata.update(
                    design_delta=format_number(delta),
                    design_lambda=format_number(design.lam),
                    design_phi_over_pi=format_number(design.phi / math.pi),
                    oscillations_tau_le_20=str(series.oscillation_count(20.0)),
                )
                tables[f"{drive.value}_{'plus' if delta > 0 else 'minus'}"] = table
        return tables


def _delta_label(delta: float, design_deltas: Tuple[float, ...]) -> str:
    if set(design_deltas) == {1.0, -1.0}:
        return "delta_plus" if delta > 0 else "delta_minus"
    return f"delta{delta:g}"


def figure_preset(name: str, **settings) -> Tables:
    """
    Run a figure preset (fig3a, fig3b, fig4a, fig4b, fig5, fig6a, fig6b, fig6c, fig6d).

    Args:
        name: Preset name
        **settings: Forwarded to :class:`PresetRunner`

    Returns:
        Dict[str, ResultTable]: One table per curve

    Raises:
        UnknownPreset: If no preset has that name
    """
    return PresetRunner(**settings).run(name)


PRESET_NAMES = PresetRunner(progress=False).names
