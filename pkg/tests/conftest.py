"""Shared parameter sets and reference states."""

import math

import numpy as np
import pytest

from src.liouvillian import DensityMatrix
from src.model import Drive, SystemParams, basis_index, build_operators


@pytest.fixture
def fig3_params():
    """Cavity-driven weak-drive parameters at Delta = kappa."""
    return SystemParams(delta_c=1.0, delta_a=1.0, chi=1.0 / math.sqrt(2.0), gamma=0.1, omega=0.005)


@pytest.fixture
def fig4_params(fig3_params):
    return fig3_params.replace(drive=Drive.ATOM)


@pytest.fixture
def fig6_params():
    """Strong-coupling parameters, cavity drive at Delta = kappa."""
    return SystemParams(delta_c=1.0, delta_a=1.0, chi=1.5, gamma=0.1, omega=0.04)


@pytest.fixture
def small_params(fig3_params):
    """Cheap truncation for plumbing tests."""
    return fig3_params.replace(n_max=3)


@pytest.fixture
def thermal_state():
    """Geometric photon distribution with the atom in |g>, far from the truncation edge."""
    params = SystemParams(n_max=40)
    ops = build_operators(params)
    ratio = 0.1
    rho = np.zeros((params.dim, params.dim), dtype=complex)
    for n in range(params.n_max + 1):
        rho[basis_index(n), basis_index(n)] = (1.0 - ratio) * ratio ** n
    rho /= np.trace(rho)
    return DensityMatrix(rho), ops


@pytest.fixture
def fock_one_state():
    params = SystemParams(n_max=4)
    ops = build_operators(params)
    rho = np.zeros((params.dim, params.dim), dtype=complex)
    rho[basis_index(1), basis_index(1)] = 1.0
    return DensityMatrix(rho), ops
