#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Perturbative amplitude method.

The wave function is truncated to |g,0>, |g,1>, |e,0>, |e,1>, |g,2> and evolved
under the effective non-Hermitian Hamiltonian. Under weak driving C_g0 = 1 and
the one-photon amplitudes are solved first, then the two-photon amplitudes
from the one-photon ones.

Complex detunings: dc' = delta_c - i kappa / 2, da' = delta_a - i gamma / 2.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.errors import DegenerateDenominator, ZeroPopulation
from src.model import Drive, SystemParams

SQRT2 = math.sqrt(2.0)
DENOMINATOR_FLOOR = 1e-12
AMPLITUDE_FLOOR = 1e-30


@dataclass(frozen=True)
class Amplitudes:
    """Steady-state probability amplitudes of the two-photon ansatz."""

    c_g0: complex
    c_g1: complex
    c_e0: complex
    c_e1: complex
    c_g2: complex


def complex_detunings(params: SystemParams) -> Tuple[complex, complex]:
    """(dc', da') including the decay rates as imaginary parts."""
    return (
        complex(params.delta_c, -0.5 * params.kappa),
        complex(params.delta_a, -0.5 * params.gamma),
    )


def one_photon_system(params: SystemParams) -> Tuple[np.ndarray, np.ndarray]:
    """
    Steady-state equations of the one-photon amplitudes, ``A @ [c_g1, c_e0] = b``.

    Cavity drive:  dc' c_g1 + chi c_e0 + omega = 0,  da' c_e0 + chi c_g1 = 0
    Atom drive:    dc' c_g1 + chi c_e0 = 0,          da' c_e0 + chi c_g1 + omega = 0
    """
    dc, da = complex_detunings(params)
    matrix = np.array([[dc, params.chi], [params.chi, da]], dtype=np.complex128)
    if params.drive is Drive.CAVITY:
        rhs = np.array([-params.omega, 0.0], dtype=np.complex128)
    else:
        rhs = np.array([0.0, -params.omega], dtype=np.complex128)
    return matrix, rhs


def two_photon_system(params: SystemParams, c_g1: complex, c_e0: complex) -> Tuple[np.ndarray, np.ndarray]:
    """
    Steady-state equations of the two-photon amplitudes, ``A @ [c_e1, c_g2] = b``.

    Rows are the c_e1 equation and the c_g2 equation (scaled by 1/sqrt 2 for the
    cavity drive) with C_g0 = 1.
    """
    dc, da = complex_detunings(params)
    pump = params.lam * np.exp(-1j * params.phi)
    matrix = np.array(
        [[dc + da, SQRT2 * params.chi], [SQRT2 * params.chi, 2.0 * dc]],
        dtype=np.complex128,
    )
    if params.drive is Drive.CAVITY:
        rhs = np.array([-params.omega * c_e0, -SQRT2 * (params.omega * c_g1 + pump)])
    else:
        rhs = np.array([-params.omega * c_g1, -SQRT2 * pump])
    return matrix, rhs.astype(np.complex128)


def _denominators(params: SystemParams) -> Tuple[complex, complex]:
    dc, da = complex_detunings(params)
    one_photon = params.chi ** 2 - dc * da
    two_photon = params.chi ** 2 - dc * (da + dc)
    for name, value in (("chi^2 - dc'da'", one_photon), ("chi^2 - dc'(da' + dc')", two_photon)):
        if abs(value) <= DENOMINATOR_FLOOR:
            raise DegenerateDenominator(f"{name} vanishes ({abs(value):.3e})")
    return one_photon, two_photon


def steady_amplitudes(params: SystemParams) -> Amplitudes:
    """
    Closed-form steady-state amplitudes.

    c_g2 is the ratio whose numerator defines the optimal pump:
    cavity drive  (lam e^{-i phi} (da'+dc')(chi^2 - dc'da') + M omega^2),
    atom drive    (lam e^{-i phi} (da'+dc')(chi^2 - dc'da') + chi^2 omega^2),
    both over sqrt2 (chi^2 - dc'da')(chi^2 - dc'(da'+dc')), with
    M = chi^2 + da'(da'+dc').

    Raises:
        DegenerateDenominator: If either denominator falls below 1e-12
    """
    one_photon, two_photon = _denominators(params)
    dc, da = complex_detunings(params)
    chi, omega = params.chi, params.omega
    detuning_sum = dc + da
    pump = params.lam * np.exp(-1j * params.phi)

    if params.drive is Drive.CAVITY:
        c_g1 = da * omega / one_photon
        c_e0 = -chi * omega / one_photon
        interference = (chi ** 2 + da * detuning_sum) * omega ** 2
        c_e1_source = omega * c_e0
    else:
        c_g1 = -chi * omega / one_photon
        c_e0 = dc * omega / one_photon
        interference = chi ** 2 * omega ** 2
        c_e1_source = omega * c_g1

    c_g2 = (pump * detuning_sum * one_photon + interference) / (SQRT2 * one_photon * two_photon)
    c_e1 = -(c_e1_source + SQRT2 * chi * c_g2) / detuning_sum

    return Amplitudes(
        c_g0=1.0 + 0.0j,
        c_g1=complex(c_g1),
        c_e0=complex(c_e0),
        c_e1=complex(c_e1),
        c_g2=complex(c_g2),
    )


def amplitude_rates(params: SystemParams, amps: Amplitudes, truncated: bool = True) -> Amplitudes:
    """
    Time derivatives of the amplitudes under the effective Hamiltonian.

    With ``truncated`` the drive terms feeding one-photon amplitudes from
    two-photon ones are dropped, as in the perturbative steady-state solution.
    The returned ``c_g0`` field is always zero.
    """
    dc, da = complex_detunings(params)
    chi, omega = params.chi, params.omega
    pump = params.lam * np.exp(-1j * params.phi)
    keep = 0.0 if truncated else 1.0
    g0, g1, e0, e1, g2 = amps.c_g0, amps.c_g1, amps.c_e0, amps.c_e1, amps.c_g2

    if params.drive is Drive.CAVITY:
        d_g1 = -1j * (dc * g1 + chi * e0 + omega * g0 + keep * SQRT2 * omega * g2)
        d_e0 = -1j * (da * e0 + chi * g1 + keep * omega * e1)
        d_e1 = -1j * ((dc + da) * e1 + SQRT2 * chi * g2 + omega * e0)
        d_g2 = -1j * SQRT2 * (SQRT2 * dc * g2 + chi * e1 + omega * g1 + pump * g0)
    else:
        d_g1 = -1j * (dc * g1 + chi * e0 + keep * omega * e1)
        d_e0 = -1j * (da * e0 + chi * g1 + omega * g0)
        d_e1 = -1j * ((dc + da) * e1 + SQRT2 * chi * g2 + omega * g1)
        d_g2 = -1j * (2.0 * dc * g2 + SQRT2 * chi * e1 + SQRT2 * pump * g0)

    return Amplitudes(c_g0=0j, c_g1=complex(d_g1), c_e0=complex(d_e0), c_e1=complex(d_e1), c_g2=complex(d_g2))


def g2_zero_analytic(amps: Amplitudes) -> float:
    """
    Amplitude-method estimate 2 |c_g2|^2 / |c_g1|^4.

    Raises:
        ZeroPopulation: If |c_g1| <= 1e-30
    """
    if abs(amps.c_g1) <= AMPLITUDE_FLOOR:
        raise ZeroPopulation("one-photon amplitude vanishes: no photons reach the cavity")
    return 2.0 * abs(amps.c_g2) ** 2 / abs(amps.c_g1) ** 4
