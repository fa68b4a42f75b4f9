#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Second-order photon correlations of the cavity field.

g2(0) = Tr[a^dag a^dag a a rho] / Tr[a^dag a rho]^2 in the steady state, and
the delayed g2(tau) through the quantum regression theorem: the operator
a rho_ss a^dag evolves under the same Liouvillian as the state itself.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np

from src.errors import ImaginaryResidue, InvalidParams, InvalidState, ZeroPopulation
from src.linalg import adjoint, unvec, vec
from src.liouvillian import (
    MAX_STEP_NORM,
    DensityMatrix,
    Liouvillian,
    build_liouvillian,
    evolution_matrix,
    expectation,
    steady_state,
)
from src.model import (
    OperatorSet,
    SystemParams,
    build_hamiltonian,
    build_operators,
    collapse_operators,
)

POPULATION_FLOOR = 1e-30
G2_ZERO_RESIDUE = 1e-10
G2_TAU_RESIDUE = 1e-8


@dataclass(frozen=True)
class G2Series:
    """Delayed correlation g2(tau) sampled on ``tau_grid`` (units of 1/kappa)."""

    tau_grid: np.ndarray
    values: np.ndarray
    g2_zero: float
    metadata: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.values.size and np.min(self.values) < -G2_TAU_RESIDUE:
            raise InvalidState(f"g2(tau) takes the negative value {np.min(self.values):.3e}")
        object.__setattr__(self, "values", np.maximum(self.values, 0.0))

    def oscillation_count(self, tau_max: float = 20.0, tolerance: float = 1e-10) -> int:
        """
        Count sign changes of the discrete derivative for tau <= tau_max.

        Differences smaller than ``tolerance`` are treated as flat and skipped.
        """
        mask = self.tau_grid <= tau_max
        slope = np.diff(self.values[mask])
        signs = np.sign(slope[np.abs(slope) > tolerance])
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def value_at(self, tau: float) -> float:
        """g2 at the grid point nearest to ``tau``."""
        return float(self.values[int(np.argmin(np.abs(self.tau_grid - tau)))])

    def to_table(self):
        """Convert to a :class:`ResultTable` with columns kappa_tau, g2_tau, log10_g2_tau."""
        from src.SweepRunner import ResultTable, log10_clamped

        rows = [[float(t), float(v), log10_clamped(float(v)), 0.0] for t, v in zip(self.tau_grid, self.values)]
        metadata = dict(self.metadata)
        metadata["g2_zero"] = f"{self.g2_zero:.12g}"
        return ResultTable(
            columns=["kappa_tau", "g2_tau", "log10_g2_tau", "error_code"],
            rows=rows,
            metadata=metadata,
            shape=(len(rows),),
        )


def _population(rho, ops: OperatorSet) -> float:
    n = expectation(ops.number, rho)
    if abs(n.imag) > G2_ZERO_RESIDUE:
        raise ImaginaryResidue(f"photon number has imaginary part {n.imag:.3e}")
    if n.real <= POPULATION_FLOOR:
        raise ZeroPopulation(f"cavity photon population {n.real:.3e} is not positive")
    return n.real


def g2_zero(rho_ss: DensityMatrix, ops: OperatorSet) -> float:
    """
    Equal-time second-order correlation.

    Raises:
        ZeroPopulation: If Tr[a^dag a rho] <= 1e-30
        ImaginaryResidue: If an expectation value has imaginary part above 1e-10
    """
    n = _population(rho_ss, ops)
    ad = adjoint(ops.a)
    pairs = expectation(ad @ ad @ ops.a @ ops.a, rho_ss)
    if abs(pairs.imag) > G2_ZERO_RESIDUE:
        raise ImaginaryResidue(f"<a^dag a^dag a a> has imaginary part {pairs.imag:.3e}")
    return pairs.real / n ** 2


def default_tau_grid(tau_max: float = 50.0, points: int = 1001) -> np.ndarray:
    return np.linspace(0.0, tau_max, points)


def g2_tau(
    L: Liouvillian,
    rho_ss: DensityMatrix,
    ops: OperatorSet,
    tau_grid: Optional[Sequence[float]] = None,
    max_step_norm: float = MAX_STEP_NORM,
) -> G2Series:
    """
    Delayed second-order correlation by the quantum regression theorem.

    Numerator Tr[a^dag a exp(L tau)(a rho_ss a^dag)], normalized by
    Tr[a^dag a rho_ss]^2. The Runge-Kutta propagator is rebuilt only when
    the grid spacing changes.

    Args:
        L: Liouvillian the steady state belongs to
        rho_ss: Steady state
        ops: Operators of the same truncation
        tau_grid: Ascending delays starting at 0 (default 1001 points over [0, 50])
        max_step_norm: Bound on h * ||L||_inf for each Runge-Kutta step

    Returns:
        G2Series: Sampled correlation

    Raises:
        InvalidParams: If the grid is empty, not ascending or does not start at 0
        ZeroPopulation: If the photon population vanishes
        ImaginaryResidue: If a normalized sample has imaginary part above 1e-8
        InvalidState: If a sample is negative beyond 1e-8
    """
    grid = default_tau_grid() if tau_grid is None else np.asarray(tau_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidParams("tau grid must be a non-empty list of delays")
    if grid[0] != 0.0:
        raise InvalidParams(f"tau grid must start at 0, starts at {grid[0]}")
    if np.any(np.diff(grid) <= 0.0):
        raise InvalidParams("tau grid must be strictly ascending")

    n = _population(rho_ss, ops)
    number = ops.number
    state = vec(ops.a @ rho_ss.rho @ adjoint(ops.a))

    values = np.empty(grid.size)
    propagators = {}
    previous = 0.0

    for i, tau in enumerate(grid):
        dt = tau - previous
        if dt > 0.0:
            key = round(dt, 12)
            if key not in propagators:
                propagators[key] = evolution_matrix(L, dt, max_step_norm)
            state = propagators[key] @ state
        previous = tau

        sample = expectation(number, unvec(state, L.dim)) / n ** 2
        if abs(sample.imag) > G2_TAU_RESIDUE:
            raise ImaginaryResidue(f"g2({tau:g}) has imaginary part {sample.imag:.3e}")
        values[i] = sample.real

    return G2Series(tau_grid=grid, values=values, g2_zero=g2_zero(rho_ss, ops))


def g2_tau_for_params(
    params: SystemParams,
    tau_grid: Optional[Sequence[float]] = None,
    max_step_norm: float = MAX_STEP_NORM,
) -> G2Series:
    """Build the model for ``params``, solve its steady state and sample g2(tau)."""
    ops = build_operators(params)
    L = build_liouvillian(build_hamiltonian(params, ops), collapse_operators(params, ops))
    return g2_tau(L, steady_state(L), ops, tau_grid, max_step_norm)
