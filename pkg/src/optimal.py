#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Closed-form optimal parametric pump.

The optimal gain and phase null the numerator of the two-photon amplitude:

    cavity drive:  lam e^{-i phi} = (chi^2 + da'(da' + dc')) omega^2 / ((da' + dc')(dc'da' - chi^2))
    atom drive:    lam e^{-i phi} = chi^2 omega^2 / ((da' + dc')(dc'da' - chi^2))
"""

import cmath
import math
from dataclasses import dataclass

from src.amplitude import complex_detunings
from src.errors import DegenerateDenominator
from src.model import Drive, SystemParams, normalize_phase

DENOMINATOR_FLOOR = 1e-12


@dataclass(frozen=True)
class OptimalPump:
    """Optimal parametric gain (units of kappa) and phase in (-pi, pi]."""

    lambda_opt: float
    phi_opt: float

    def apply(self, params: SystemParams) -> SystemParams:
        """Return ``params`` with this pump installed."""
        return params.replace(lam=self.lambda_opt, phi=self.phi_opt)


def optimal_pump_value(params: SystemParams) -> complex:
    """
    Complex right-hand side z = lam_opt e^{-i phi_opt}.

    Raises:
        DegenerateDenominator: If |(da'+dc')(dc'da'-chi^2)| <= 1e-12 omega^2
    """
    dc, da = complex_detunings(params)
    denominator = (da + dc) * (dc * da - params.chi ** 2)
    if abs(denominator) <= DENOMINATOR_FLOOR * params.omega ** 2:
        raise DegenerateDenominator(f"optimal pump denominator vanishes ({abs(denominator):.3e})")

    if params.drive is Drive.CAVITY:
        numerator = (params.chi ** 2 + da * (da + dc)) * params.omega ** 2
    else:
        numerator = params.chi ** 2 * params.omega ** 2
    return numerator / denominator


def optimal_pump(params: SystemParams) -> OptimalPump:
    """
    Optimal pump for the drive configuration of ``params``.

    Returns:
        OptimalPump: lambda_opt = |z|, phi_opt = -arg(z) on (-pi, pi]
    """
    z = optimal_pump_value(params)
    return OptimalPump(lambda_opt=abs(z), phi_opt=normalize_phase(-cmath.phase(z)))


def phase_over_pi(pump: OptimalPump) -> float:
    return pump.phi_opt / math.pi
