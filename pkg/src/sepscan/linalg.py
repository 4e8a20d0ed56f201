"""Dense complex linear algebra for small matrices.

Contract-checked wrappers around LAPACK (through numpy) for the handful
of operations the rest of the package needs: Hilbert-Schmidt inner
products, Hermitian eigenvalues, singular values, and the trace norm.
Inputs may be anything convertible to a 2-D complex array; non-finite
entries are rejected up front so failures surface here rather than as
garbage spectra downstream.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NotHermitianError

#: Default bound on the max |m - m^H| entry accepted by eigvals_hermitian.
DEFAULT_HERMITICITY_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a 2-D complex128 array with finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got {a.ndim}-D input")
    if a.size and not np.isfinite(a).all():
        raise ValueError("matrix has NaN or Inf entries")
    return a


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product trace(a^H b).

    Conjugate-linear in ``a`` and linear in ``b``, so ``hs_inner(a, a)``
    is the squared Frobenius norm (real and non-negative).
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def hermiticity_deviation(m) -> float:
    """Largest entrywise deviation of ``m`` from its conjugate transpose."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"hermiticity needs a square matrix, got {m.shape}")
    if m.size == 0:
        return 0.0
    return float(np.abs(m - m.conj().T).max())


def eigvals_hermitian(m, hermiticity_tol: float = DEFAULT_HERMITICITY_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    The input must be square and Hermitian within ``hermiticity_tol``
    (max-entry deviation raises NotHermitianError beyond that); it is
    symmetrized before the solve so the returned spectrum is exactly
    real.
    """
    m = as_matrix(m)
    deviation = hermiticity_deviation(m)
    if deviation > hermiticity_tol:
        raise NotHermitianError(deviation, hermiticity_tol)
    return np.linalg.eigvalsh((m + m.conj().T) / 2)


def singular_values(m) -> np.ndarray:
    """Singular values of an arbitrary finite matrix, sorted descending."""
    return np.linalg.svd(as_matrix(m), compute_uv=False)


def trace_norm(m) -> float:
    """Trace norm: the sum of singular values."""
    return float(singular_values(m).sum())
