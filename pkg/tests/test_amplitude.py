"""Tests for the perturbative amplitude method."""

import numpy as np
import pytest

from src.amplitude import (
    amplitude_rates,
    g2_zero_analytic,
    one_photon_system,
    steady_amplitudes,
    two_photon_system,
)
from src.errors import DegenerateDenominator, ZeroPopulation
from src.liouvillian import build_liouvillian, steady_state
from src.correlations import g2_zero
from src.model import Drive, SystemParams, build_hamiltonian, build_operators, collapse_operators

DRIVES = [Drive.CAVITY, Drive.ATOM]


def random_params(rng, drive):
    return SystemParams(
        drive=drive,
        delta_c=rng.uniform(-3.0, 3.0),
        delta_a=rng.uniform(-3.0, 3.0),
        chi=rng.uniform(0.1, 2.0),
        lam=rng.uniform(0.0, 0.01),
        phi=rng.uniform(-np.pi, np.pi),
        gamma=rng.uniform(0.01, 0.5),
        omega=rng.uniform(0.001, 0.05),
    )


def residual(matrix, x, rhs):
    return np.max(np.abs(matrix @ x - rhs))


def scale(matrix, x):
    """Unit for well-scaled systems, |A| |x| when the amplitudes are large."""
    return max(1.0, np.max(np.abs(matrix)) * np.max(np.abs(x)))


def numeric(params):
    ops = build_operators(params)
    L = build_liouvillian(build_hamiltonian(params, ops), collapse_operators(params, ops))
    return g2_zero(steady_state(L), ops)


@pytest.mark.parametrize("drive", DRIVES)
class TestLinearSystems:
    def test_one_photon_residual(self, drive):
        rng = np.random.default_rng(41)
        for _ in range(100):
            params = random_params(rng, drive)
            amps = steady_amplitudes(params)
            matrix, rhs = one_photon_system(params)
            x = np.array([amps.c_g1, amps.c_e0])
            assert residual(matrix, x, rhs) <= 1e-12 * scale(matrix, x)

    def test_two_photon_residual(self, drive):
        rng = np.random.default_rng(43)
        for _ in range(100):
            params = random_params(rng, drive)
            amps = steady_amplitudes(params)
            matrix, rhs = two_photon_system(params, amps.c_g1, amps.c_e0)
            x = np.array([amps.c_e1, amps.c_g2])
            assert residual(matrix, x, rhs) <= 1e-12 * scale(matrix, x)

    def test_truncated_rates_vanish(self, fig6_params, drive):
        params = fig6_params.replace(drive=drive, lam=1e-3, phi=0.5)
        rates = amplitude_rates(params, steady_amplitudes(params))
        for value in (rates.c_g0, rates.c_g1, rates.c_e0, rates.c_e1, rates.c_g2):
            assert abs(value) <= 1e-12

    def test_dropped_terms_are_higher_order(self, fig3_params, drive):
        params = fig3_params.replace(drive=drive)
        amps = steady_amplitudes(params)
        full = amplitude_rates(params, amps, truncated=False)
        assert abs(full.c_g1) + abs(full.c_e0) <= 10.0 * params.omega ** 3


class TestSteadyAmplitudes:
    def test_cavity_one_photon_closed_form(self, fig3_params):
        amps = steady_amplitudes(fig3_params)
        dc, da = 1.0 - 0.5j, 1.0 - 0.05j
        p = 0.5 - dc * da
        assert amps.c_g1 == pytest.approx(da * 0.005 / p)
        assert amps.c_e0 == pytest.approx(-np.sqrt(0.5) * 0.005 / p)
        assert amps.c_g0 == 1.0

    def test_degenerate_denominator(self):
        params = SystemParams(delta_a=0.0, chi=0.0, gamma=0.0)
        with pytest.raises(DegenerateDenominator):
            steady_amplitudes(params)

    def test_atom_drive_without_coupling(self, fig4_params):
        amps = steady_amplitudes(fig4_params.replace(chi=0.0, lam=1e-4))
        assert amps.c_g1 == 0.0
        with pytest.raises(ZeroPopulation):
            g2_zero_analytic(amps)


@pytest.mark.parametrize("drive", DRIVES)
@pytest.mark.parametrize("delta", [-2.0, 0.5, 2.5])
def test_agrees_with_master_equation(fig3_params, drive, delta):
    params = fig3_params.replace(drive=drive, n_max=6).with_detuning(delta)
    analytic = g2_zero_analytic(steady_amplitudes(params))
    assert analytic == pytest.approx(numeric(params), rel=0.2)
