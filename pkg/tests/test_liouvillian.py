"""Tests for the Liouvillian, steady state and time propagation."""

import numpy as np
import pytest

from src.errors import DegenerateKernel, DimensionMismatch, InvalidParams, InvalidState, StepSizeUnderflow
from src.linalg import vec
from src.liouvillian import (
    DensityMatrix,
    build_liouvillian,
    evolution_matrix,
    expectation,
    photon_number_distribution,
    propagate,
    rk4_step_matrix,
    step_plan,
    steady_state,
    truncation_weight,
)
from src.model import SystemParams, basis_index, build_hamiltonian, build_operators, collapse_operators


def model(params):
    ops = build_operators(params)
    L = build_liouvillian(build_hamiltonian(params, ops), collapse_operators(params, ops))
    return L, ops


def vacuum(dim):
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1.0
    return DensityMatrix(rho)


class TestDensityMatrix:
    def test_valid(self):
        state = DensityMatrix(np.diag([0.75, 0.25]))
        assert state.dim == 2
        assert state.min_eigenvalue == pytest.approx(0.25)

    @pytest.mark.parametrize("rho", [
        np.diag([1.0, 1.0]),
        np.array([[0.5, 0.4], [0.1, 0.5]]),
        np.diag([1.5, -0.5]),
    ])
    def test_invalid(self, rho):
        with pytest.raises(InvalidState):
            DensityMatrix(rho)


class TestLiouvillian:
    def test_dimension(self, small_params):
        L, _ = model(small_params)
        assert L.matrix.shape == (64, 64)
        assert L.dim == 8

    def test_trace_preserving(self, small_params):
        L, _ = model(small_params)
        trace_row = vec(np.eye(L.dim))
        np.testing.assert_allclose(trace_row @ L.matrix, 0.0, atol=1e-13)

    def test_unitary_part(self):
        h = np.array([[1.0, 0.5], [0.5, -1.0]], dtype=complex)
        rho = np.array([[0.7, 0.1j], [-0.1j, 0.3]])
        L = build_liouvillian(h, [])
        np.testing.assert_allclose(L.apply(rho), -1j * (h @ rho - rho @ h), atol=1e-15)

    def test_decay_of_excited_level(self):
        lowering = np.array([[0.0, 1.0], [0.0, 0.0]])
        L = build_liouvillian(np.zeros((2, 2)), [lowering])
        derivative = L.apply(np.diag([0.0, 1.0]))
        np.testing.assert_allclose(derivative, np.diag([1.0, -1.0]), atol=1e-15)

    def test_preserves_hermiticity(self, small_params):
        params = small_params.replace(lam=1e-2, phi=0.7)
        L, _ = model(params)
        rng = np.random.default_rng(19)
        for _ in range(10):
            m = rng.normal(size=(L.dim, L.dim)) + 1j * rng.normal(size=(L.dim, L.dim))
            derivative = L.apply(m + m.conj().T)
            assert np.max(np.abs(derivative - derivative.conj().T)) <= 1e-12

    def test_collapse_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            build_liouvillian(np.eye(2), [np.eye(3)])


class TestSteadyState:
    def test_invariants(self, fig3_params):
        L, _ = model(fig3_params)
        rho = steady_state(L)

        assert np.trace(rho.rho) == pytest.approx(1.0, abs=1e-10)
        np.testing.assert_allclose(rho.rho, rho.rho.conj().T, atol=1e-10)
        assert rho.min_eigenvalue >= -1e-8
        assert np.max(np.abs(L.matrix @ vec(rho.rho))) <= 1e-8

    def test_undriven_is_vacuum(self):
        L, _ = model(SystemParams(n_max=3, omega=0.0))
        np.testing.assert_allclose(steady_state(L).rho, vacuum(8).rho, atol=1e-12)

    def test_degenerate_kernel(self):
        L = build_liouvillian(np.zeros((2, 2)), [])
        with pytest.raises(DegenerateKernel):
            steady_state(L)

    def test_truncation_weight_small(self, fig3_params):
        L, ops = model(fig3_params)
        rho = steady_state(L)
        assert photon_number_distribution(rho, ops).sum() == pytest.approx(1.0)
        assert truncation_weight(rho, ops) < 1e-12


class TestPropagation:
    def test_step_matrix_is_taylor_polynomial(self, small_params):
        L, _ = model(small_params)
        h = 0.01
        hl = h * L.matrix
        eye = np.eye(hl.shape[0])
        expected = eye + hl + hl @ hl / 2 + hl @ hl @ hl / 6 + hl @ hl @ hl @ hl / 24
        np.testing.assert_allclose(rk4_step_matrix(L, h), expected, atol=1e-14)

    def test_step_plan_bound(self, small_params):
        L, _ = model(small_params)
        steps, h = step_plan(L, 3.0)
        assert steps * h == pytest.approx(3.0)
        assert h * L.norm <= 0.1 + 1e-12

    def test_step_underflow(self, small_params):
        L, _ = model(small_params)
        with pytest.raises(StepSizeUnderflow):
            step_plan(L, 1e9)

    def test_zero_time(self, small_params):
        L, _ = model(small_params)
        np.testing.assert_array_equal(evolution_matrix(L, 0.0), np.eye(64))
        assert propagate(L, vacuum(8), 0.0).rho[0, 0] == 1.0

    def test_negative_time(self, small_params):
        L, _ = model(small_params)
        with pytest.raises(InvalidParams):
            propagate(L, vacuum(8), -1.0)

    def test_dimension_mismatch(self, small_params):
        L, _ = model(small_params)
        with pytest.raises(DimensionMismatch):
            propagate(L, vacuum(4), 1.0)

    def test_decay_matches_exponential(self):
        lowering = np.array([[0.0, 1.0], [0.0, 0.0]])
        L = build_liouvillian(np.zeros((2, 2)), [lowering])
        rho = propagate(L, np.diag([0.0, 1.0]), 2.0)
        assert rho.rho[1, 1].real == pytest.approx(np.exp(-2.0), rel=1e-5)

    def test_relaxes_to_steady_state(self, fig3_params):
        L, _ = model(fig3_params)
        rho = propagate(L, vacuum(fig3_params.dim), 400.0)
        np.testing.assert_allclose(rho.rho, steady_state(L).rho, atol=1e-6)


class TestExpectation:
    def test_photon_number_of_fock_state(self):
        params = SystemParams(n_max=4)
        ops = build_operators(params)
        rho = np.zeros((params.dim, params.dim))
        rho[basis_index(3), basis_index(3)] = 1.0
        assert expectation(ops.number, rho) == pytest.approx(3.0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            expectation(np.eye(2), np.eye(3) / 3)
