#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lindblad master equation on vectorized density matrices.

Builds the Liouvillian superoperator under column stacking, solves for the
steady state, propagates in time with fixed-step fourth-order Runge-Kutta and
evaluates expectation values.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from src.errors import (
    DegenerateKernel,
    DimensionMismatch,
    InvalidParams,
    InvalidState,
    SingularMatrix,
    StepSizeUnderflow,
    TraceDrift,
)
from src.linalg import (
    CMatrix,
    adjoint,
    as_cmatrix,
    hermitian_eigenvalues,
    is_hermitian,
    solve,
    unvec,
    vec,
)
from src.model import OperatorSet

STEADY_STATE_RESIDUAL = 1e-8
MAX_STEP_NORM = 0.1
MAX_STEPS = 10 ** 8
DRIFT_REPAIR = 1e-12
DRIFT_LIMIT = 1e-8


@dataclass(frozen=True)
class Liouvillian:
    """Generator of the master equation acting on ``vec(rho)``."""

    matrix: CMatrix
    dim: int

    @property
    def norm(self) -> float:
        """Infinity norm (maximum absolute row sum)."""
        return float(np.max(np.sum(np.abs(self.matrix), axis=1)))

    def apply(self, rho: CMatrix) -> CMatrix:
        """Right-hand side of the master equation for ``rho``."""
        return unvec(self.matrix @ vec(rho), self.dim)


@dataclass(frozen=True)
class DensityMatrix:
    """
    Hermitian, unit-trace, positive-semidefinite state.

    Invariants are checked at construction and violations raise InvalidState.
    """

    rho: CMatrix

    def __post_init__(self):
        rho = as_cmatrix(self.rho)
        object.__setattr__(self, "rho", rho)

        if rho.shape[0] != rho.shape[1]:
            raise InvalidState(f"density matrix must be square, got {rho.shape}")
        if not is_hermitian(rho, 1e-10):
            raise InvalidState("density matrix is not Hermitian within 1e-10")
        if abs(np.trace(rho) - 1.0) > 1e-10:
            raise InvalidState(f"density matrix trace {np.trace(rho).real:.12g} differs from 1")
        if self.min_eigenvalue < -1e-8:
            raise InvalidState(f"density matrix has eigenvalue {self.min_eigenvalue:.3e}")

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    @property
    def min_eigenvalue(self) -> float:
        return float(hermitian_eigenvalues(self.rho)[0])


State = Union[DensityMatrix, CMatrix]


def _raw(rho: State) -> CMatrix:
    return rho.rho if isinstance(rho, DensityMatrix) else as_cmatrix(rho)


def build_liouvillian(H: CMatrix, collapses: Sequence[CMatrix]) -> Liouvillian:
    """
    Liouvillian of drho/dt = -i[H, rho] + sum_k (2 C rho C^dag - rho C^dag C - C^dag C rho) / 2.

    Column stacking gives vec(A X B) = (B^T (x) A) vec(X).

    Args:
        H: Hermitian Hamiltonian of dimension D
        collapses: Collapse operators C_k of dimension D (rates already folded in)

    Returns:
        Liouvillian: D^2 x D^2 generator

    Raises:
        DimensionMismatch: If any operator is not D x D
    """
    h = as_cmatrix(H)
    dim = h.shape[0]
    if h.shape != (dim, dim):
        raise DimensionMismatch(f"Hamiltonian must be square, got {h.shape}")

    eye = np.eye(dim, dtype=np.complex128)
    matrix = -1j * (np.kron(eye, h) - np.kron(h.T, eye))

    for c in collapses:
        c = as_cmatrix(c)
        if c.shape != (dim, dim):
            raise DimensionMismatch(f"collapse operator of shape {c.shape} for dimension {dim}")
        cdc = adjoint(c) @ c
        matrix = matrix + np.kron(c.conj(), c) - 0.5 * (np.kron(eye, cdc) + np.kron(cdc.T, eye))

    return Liouvillian(matrix=matrix, dim=dim)


def _trace_row(dim: int) -> np.ndarray:
    row = np.zeros(dim * dim, dtype=np.complex128)
    row[:: dim + 1] = 1.0
    return row


def _hermitize(rho: CMatrix) -> CMatrix:
    return 0.5 * (rho + rho.conj().T)


def steady_state(L: Liouvillian) -> DensityMatrix:
    """
    Unit-trace kernel vector of the Liouvillian.

    The first row of L is replaced by the trace functional, weighted by the mean
    magnitude of the non-zero entries of L, and the resulting linear system is
    solved directly.

    Raises:
        DegenerateKernel: If the trace-replaced system is singular or the
            residual exceeds 1e-8
    """
    dim = L.dim
    system = L.matrix.copy()
    magnitudes = np.abs(system[system != 0])
    weight = float(np.mean(magnitudes)) if magnitudes.size else 1.0

    system[0, :] = weight * _trace_row(dim)
    rhs = np.zeros(dim * dim, dtype=np.complex128)
    rhs[0] = weight

    try:
        x = solve(system, rhs)
    except SingularMatrix as e:
        raise DegenerateKernel(f"steady state is not unique: {e}") from e

    rho = _hermitize(unvec(x, dim))
    rho = rho / np.trace(rho).real

    residual = float(np.max(np.abs(L.matrix @ vec(rho))))
    if residual > STEADY_STATE_RESIDUAL:
        raise DegenerateKernel(f"steady-state residual {residual:.3e} above {STEADY_STATE_RESIDUAL:g}")

    return DensityMatrix(rho)


def rk4_step_matrix(L: Liouvillian, h: float) -> CMatrix:
    """
    Matrix of one classical Runge-Kutta step of size ``h``.

    For the linear system dv/dt = L v the four stages collapse to the degree-4
    Taylor polynomial I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24.
    """
    hl = h * L.matrix
    eye = np.eye(hl.shape[0], dtype=np.complex128)
    step = eye + hl / 4.0
    step = eye + (hl @ step) / 3.0
    step = eye + (hl @ step) / 2.0
    return eye + hl @ step


def step_plan(L: Liouvillian, t: float, max_step_norm: float = MAX_STEP_NORM) -> Tuple[int, float]:
    """
    Number of Runge-Kutta steps and step size covering ``t``.

    Steps satisfy h * ||L||_inf <= max_step_norm.

    Raises:
        StepSizeUnderflow: If more than 1e8 steps would be required
    """
    if t <= 0.0:
        return 0, 0.0
    steps = max(1, math.ceil(t * L.norm / max_step_norm))
    if steps > MAX_STEPS:
        raise StepSizeUnderflow(f"{steps} Runge-Kutta steps required for t = {t:g}")
    return steps, t / steps


def evolution_matrix(L: Liouvillian, t: float, max_step_norm: float = MAX_STEP_NORM) -> CMatrix:
    """Runge-Kutta approximation of exp(L t)."""
    steps, h = step_plan(L, t, max_step_norm)
    if steps == 0:
        return np.eye(L.matrix.shape[0], dtype=np.complex128)
    return np.linalg.matrix_power(rk4_step_matrix(L, h), steps)


def propagate(L: Liouvillian, rho0: State, t: float, max_step_norm: float = MAX_STEP_NORM) -> DensityMatrix:
    """
    Evolve a density matrix for time ``t`` (units of 1/kappa).

    Drift of the trace or of Hermiticity above 1e-12 is repaired by
    symmetrizing and renormalizing.

    Raises:
        InvalidParams: If ``t`` is negative
        DimensionMismatch: If ``rho0`` does not match the Liouvillian
        TraceDrift: If the drift exceeds 1e-8
    """
    if t < 0.0:
        raise InvalidParams(f"propagation time must be non-negative, got {t}")

    state = rho0 if isinstance(rho0, DensityMatrix) else DensityMatrix(rho0)
    if state.dim != L.dim:
        raise DimensionMismatch(f"state of dimension {state.dim} for a Liouvillian of dimension {L.dim}")
    if t == 0.0:
        return state

    rho = unvec(evolution_matrix(L, t, max_step_norm) @ vec(state.rho), L.dim)

    drift = max(
        abs(np.trace(rho) - 1.0),
        float(np.max(np.abs(rho - rho.conj().T))),
    )
    if drift > DRIFT_LIMIT:
        raise TraceDrift(f"propagation drift {drift:.3e} above {DRIFT_LIMIT:g}")
    if drift > DRIFT_REPAIR:
        rho = _hermitize(rho)
        rho = rho / np.trace(rho).real

    return DensityMatrix(rho)


def expectation(O: CMatrix, rho: State) -> complex:
    """
    Tr[O rho].

    Raises:
        DimensionMismatch: If dimensions differ
    """
    o, r = as_cmatrix(O), _raw(rho)
    if o.shape != r.shape or o.shape[0] != o.shape[1]:
        raise DimensionMismatch(f"operator {o.shape} against state {r.shape}")
    return complex(np.einsum("ij,ji->", o, r))


def photon_number_distribution(rho: State, ops: OperatorSet) -> np.ndarray:
    """Populations of the cavity Fock levels 0..n_max (atom traced out)."""
    diagonal = np.real(np.diag(_raw(rho)))
    if diagonal.size != ops.dim:
        raise DimensionMismatch(f"state of dimension {diagonal.size} for operators of dimension {ops.dim}")
    return diagonal.reshape(-1, 2).sum(axis=1)


def truncation_weight(rho: State, ops: OperatorSet) -> float:
    """Population left in the highest Fock level."""
    return float(photon_number_distribution(rho, ops)[-1])
