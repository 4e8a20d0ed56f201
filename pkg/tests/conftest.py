"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random Hermitian matrix, entries scaled so norms stay O(1)."""
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(n)
    return (g + g.conj().T) / 2


def random_complex(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Random complex Gaussian matrix, scaled like random_hermitian."""
    g = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    return g / np.sqrt(max(rows, cols))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary via QR with the phase convention fixed."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_simplex(rng: np.random.Generator) -> tuple[float, ...]:
    """Uniform (flat Dirichlet) point on the 5-simplex."""
    return tuple(float(x) for x in rng.dirichlet(np.ones(6)))


def canonical_bd_matrix(p) -> np.ndarray:
    """Entrywise 6x6 table for a Bell-decomposable state.

    Independent oracle for bell_decomposable: every entry written out by
    hand from the twelve outer-product terms, each carrying a global
    coefficient of one half.
    """
    p1, p2, p3, p4, p5, p6 = p
    m = np.zeros((6, 6))
    m[0, 0] = m[4, 4] = (p1 + p2) / 2
    m[0, 4] = m[4, 0] = (p1 - p2) / 2
    m[1, 1] = m[5, 5] = (p3 + p4) / 2
    m[1, 5] = m[5, 1] = (p3 - p4) / 2
    m[2, 2] = m[3, 3] = (p5 + p6) / 2
    m[2, 3] = m[3, 2] = (p5 - p6) / 2
    return m
