#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Cavity QED model with a degenerate parametric pump.

Builds the truncated-Fock-space operators of a single two-level atom in a
cavity, the rotating-frame Hamiltonian with either a coherent cavity drive or a
coherent atom drive, the effective non-Hermitian Hamiltonian used by the
amplitude method and the collapse operators of the master equation.

Conventions: hbar = 1, all rates in units of the cavity decay rate kappa,
composite space ordered cavity (x) atom with atom basis (|g>, |e>), so the basis
index of |n, g> is 2n and of |n, e> is 2n + 1.
"""

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List

import numpy as np

from src.errors import InvalidParams
from src.linalg import CMatrix, adjoint, kron


class Drive(str, Enum):
    """Which subsystem the coherent drive acts on."""

    CAVITY = "cavity"
    ATOM = "atom"


def normalize_phase(phi: float) -> float:
    """Map an angle onto (-pi, pi]."""
    return math.pi - (math.pi - phi) % (2.0 * math.pi)


@dataclass(frozen=True)
class SystemParams:
    """
    Physical parameters of the driven, parametrically pumped cavity.

    All rates are in units of kappa, which is fixed to 1. ``lam`` is the
    parametric gain (``lambda`` in config files and sweep axes) and ``phi`` the
    phase between the parametric pump and the coherent drive.
    """

    delta_c: float = 1.0
    delta_a: float = 1.0
    chi: float = 1.0 / math.sqrt(2.0)
    lam: float = 0.0
    phi: float = 0.0
    omega: float = 0.005
    kappa: float = 1.0
    gamma: float = 0.1
    drive: Drive = Drive.CAVITY
    n_max: int = 10

    def __post_init__(self):
        object.__setattr__(self, "drive", Drive(self.drive))
        object.__setattr__(self, "n_max", int(self.n_max))

        for name in ("delta_c", "delta_a", "chi", "lam", "phi", "omega", "kappa", "gamma"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParams(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

        if self.kappa != 1.0:
            raise InvalidParams("kappa is the unit of all rates and must equal 1")
        for name in ("lam", "omega", "chi", "gamma"):
            if getattr(self, name) < 0.0:
                raise InvalidParams(f"{name} must be non-negative, got {getattr(self, name)}")
        if self.n_max < 2:
            raise InvalidParams(f"n_max must be at least 2, got {self.n_max}")

        object.__setattr__(self, "phi", normalize_phase(self.phi))

    @property
    def dim(self) -> int:
        """Dimension D of the composite Hilbert space."""
        return 2 * (self.n_max + 1)

    def replace(self, **changes: Any) -> "SystemParams":
        return dataclasses.replace(self, **changes)

    def with_detuning(self, delta: float) -> "SystemParams":
        """Set both detunings to ``delta``."""
        return self.replace(delta_c=delta, delta_a=delta)

    def as_dict(self) -> Dict[str, Any]:
        out = dataclasses.asdict(self)
        out["drive"] = self.drive.value
        return out


@dataclass(frozen=True)
class OperatorSet:
    """Ladder operators on the composite cavity (x) atom space."""

    a: CMatrix
    sigma: CMatrix
    identity: CMatrix

    @property
    def number(self) -> CMatrix:
        """Cavity photon number a^dag a."""
        return adjoint(self.a) @ self.a

    @property
    def excitation(self) -> CMatrix:
        """Atomic excitation sigma^dag sigma."""
        return adjoint(self.sigma) @ self.sigma

    @property
    def dim(self) -> int:
        return self.identity.shape[0]


def basis_index(n: int, excited: bool = False) -> int:
    """Composite basis index of |n, g> or |n, e>."""
    return 2 * n + (1 if excited else 0)


def build_operators(params: SystemParams) -> OperatorSet:
    """
    Build a, sigma and the identity for the truncation ``params.n_max``.

    Args:
        params: System parameters (only ``n_max`` is used)

    Returns:
        OperatorSet: a = a_cav (x) I_2 and sigma = I_cav (x) |g><e|
    """
    levels = params.n_max + 1
    a_cav = np.diag(np.sqrt(np.arange(1, levels, dtype=float)), k=1).astype(np.complex128)
    lowering = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)

    return OperatorSet(
        a=kron(a_cav, np.eye(2)),
        sigma=kron(np.eye(levels), lowering),
        identity=np.eye(2 * levels, dtype=np.complex128),
    )


def build_hamiltonian(params: SystemParams, ops: OperatorSet) -> CMatrix:
    """
    Rotating-frame Hamiltonian.

    H = dc a^dag a + da s^dag s + chi (a^dag s + a s^dag)
        + lam (a^dag^2 e^{-i phi} + a^2 e^{i phi}) + H_d

    with H_d = omega (a^dag + a) for a cavity drive and omega (s^dag + s) for an
    atom drive.
    """
    a, s = ops.a, ops.sigma
    ad, sd = adjoint(a), adjoint(s)

    h = params.delta_c * (ad @ a) + params.delta_a * (sd @ s)
    h = h + params.chi * (ad @ s + a @ sd)

    pump = params.lam * np.exp(-1j * params.phi) * (ad @ ad)
    h = h + pump + adjoint(pump)

    if params.drive is Drive.CAVITY:
        h = h + params.omega * (ad + a)
    else:
        h = h + params.omega * (sd + s)

    return h


def build_effective_hamiltonian(params: SystemParams, ops: OperatorSet) -> CMatrix:
    """Non-Hermitian H - (i kappa / 2) a^dag a - (i gamma / 2) s^dag s."""
    decay = 0.5 * (params.kappa * ops.number + params.gamma * ops.excitation)
    return build_hamiltonian(params, ops) - 1j * decay


def collapse_operators(params: SystemParams, ops: OperatorSet) -> List[CMatrix]:
    """Collapse operators [sqrt(kappa) a, sqrt(gamma) sigma]."""
    return [math.sqrt(params.kappa) * ops.a, math.sqrt(params.gamma) * ops.sigma]
