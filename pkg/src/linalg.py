#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Dense complex linear algebra.

Thin validated layer over numpy / scipy.linalg. Every operator and superoperator
of the simulation is a ``complex128`` two-dimensional array (``CMatrix``); the
largest one is the Liouvillian at D^2 x D^2 with D = 2 (n_max + 1).
"""

import warnings

import numpy as np
import scipy.linalg

from src.errors import DimensionMismatch, NonFiniteResult, NotHermitian, SingularMatrix

CMatrix = np.ndarray

PIVOT_TOLERANCE = 1e-14
HERMITIAN_TOLERANCE = 1e-10


def as_cmatrix(a) -> CMatrix:
    """
    Convert input to a finite two-dimensional complex matrix.

    Args:
        a: Array-like input

    Returns:
        CMatrix: ``complex128`` copy-free view where possible

    Raises:
        DimensionMismatch: If input is not two-dimensional
        NonFiniteResult: If input holds NaN or Inf entries
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got an array of shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteResult("matrix holds non-finite entries")
    return m


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product, ``result[i*b.rows+k, j*b.cols+l] = a[i,j] * b[k,l]``."""
    return np.kron(as_cmatrix(a), as_cmatrix(b))


def adjoint(a: CMatrix) -> CMatrix:
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T


def trace(a: CMatrix) -> complex:
    return complex(np.trace(as_cmatrix(a)))


def is_hermitian(a: CMatrix, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
    m = as_cmatrix(a)
    if m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tolerance)


def vec(m: CMatrix) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(m, dtype=np.complex128).reshape(-1, order="F")


def unvec(v: np.ndarray, dim: int) -> CMatrix:
    """Inverse of :func:`vec` for a ``dim`` x ``dim`` matrix."""
    return np.asarray(v, dtype=np.complex128).reshape((dim, dim), order="F")


def solve(a: CMatrix, b: np.ndarray, refine_steps: int = 1) -> np.ndarray:
    """
    Solve ``a x = b`` by LU factorization with partial pivoting.

    The factorization is reused for ``refine_steps`` rounds of iterative
    refinement on the residual.

    Args:
        a: Square coefficient matrix
        b: Right-hand side vector of length ``a.rows``
        refine_steps: Number of refinement rounds

    Returns:
        np.ndarray: Solution vector

    Raises:
        DimensionMismatch: If shapes are incompatible
        SingularMatrix: If a pivot falls below 1e-14 relative to the largest entry
    """
    m = as_cmatrix(a)
    rhs = np.asarray(b, dtype=np.complex128)

    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"coefficient matrix is not square: {m.shape}")
    if rhs.shape != (m.shape[0],):
        raise DimensionMismatch(f"right-hand side of shape {rhs.shape} for a {m.shape} system")

    scale = np.max(np.abs(m), initial=0.0)
    if scale == 0.0:
        raise SingularMatrix("coefficient matrix is zero")

    with warnings.catch_warnings():
        # exact zero pivots are reported below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)

    pivots = np.abs(np.diag(lu))
    if np.min(pivots) < PIVOT_TOLERANCE * scale:
        raise SingularMatrix(
            f"pivot {np.min(pivots):.3e} below {PIVOT_TOLERANCE:g} x {scale:.3e}"
        )

    x = scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)
    for _ in range(refine_steps):
        x = x + scipy.linalg.lu_solve((lu, piv), rhs - m @ x, check_finite=False)

    if not np.all(np.isfinite(x)):
        raise NonFiniteResult("linear solve produced non-finite entries")
    return x


def hermitian_eigenvalues(a: CMatrix) -> np.ndarray:
    """
    Eigenvalues of a Hermitian matrix.

    Args:
        a: Hermitian matrix (within 1e-10 entrywise)

    Returns:
        np.ndarray: Real eigenvalues in ascending order

    Raises:
        NotHermitian: If the input is not Hermitian
    """
    m = as_cmatrix(a)
    if not is_hermitian(m):
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    return np.linalg.eigvalsh(m)
