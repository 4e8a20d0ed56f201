"""Constructors for bipartite density matrices.

Provides the fixed maximally entangled basis of the 2x3 system,
Bell-decomposable mixtures over it, and seeded random ensembles (generic
full-rank densities and separable mixtures) that the tests lean on.

Index convention: the product ket |ij> (i on the 2-level side, j on the
3-level side, both 1-based) sits at flat index (i - 1) * dim_b + (j - 1),
so the 2x3 kets are ordered |11>, |12>, |13>, |21>, |22>, |23>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidSimplexError, InvalidStateError
from .linalg import as_matrix, eigvals_hermitian, hermiticity_deviation

#: Tolerances for the density-matrix invariants checked on construction.
HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10

#: Mixing probabilities must sum to one within this bound.
SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class BDParams:
    """Mixing probabilities of a Bell-decomposable 2x3 state.

    Six probabilities forming a point on the 5-simplex: each in [0, 1]
    and summing to 1 within 1e-12. Stored as a plain tuple of floats.
    """

    p: tuple[float, float, float, float, float, float]

    def __post_init__(self):
        p = tuple(float(x) for x in self.p)
        if len(p) != 6:
            raise InvalidSimplexError(f"expected 6 probabilities, got {len(p)}")
        if not all(math.isfinite(x) for x in p):
            raise InvalidSimplexError(f"probabilities must be finite: {p}")
        if any(x < 0.0 or x > 1.0 for x in p):
            raise InvalidSimplexError(f"probabilities must lie in [0, 1]: {p}")
        total = math.fsum(p)
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise InvalidSimplexError(
                f"probabilities sum to {total!r}, not 1 within {SIMPLEX_TOL}"
            )
        object.__setattr__(self, "p", p)

    def as_array(self) -> np.ndarray:
        return np.array(self.p)


def as_bd_params(params) -> BDParams:
    """Coerce a 6-sequence of probabilities; BDParams passes through."""
    if isinstance(params, BDParams):
        return params
    return BDParams(tuple(params))


@dataclass(frozen=True)
class BipartiteDensity:
    """Density matrix of a bipartite system, tagged with subsystem dims.

    Validated on construction: the matrix must be (dim_a*dim_b) square,
    Hermitian within 1e-10, unit trace within 1e-10, and positive
    semidefinite down to -1e-10 on the smallest eigenvalue. The stored
    array is a read-only copy.
    """

    dim_a: int
    dim_b: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.dim_a < 1 or self.dim_b < 1:
            raise DimensionError("subsystem dimensions must be positive")
        m = as_matrix(self.matrix)
        d = self.dim_a * self.dim_b
        if m.shape != (d, d):
            raise InvalidStateError(
                f"matrix shape {m.shape} does not match subsystem dims "
                f"{self.dim_a}x{self.dim_b} (expected {(d, d)})"
            )
        deviation = hermiticity_deviation(m)
        if deviation > HERMITICITY_TOL:
            raise InvalidStateError(
                f"matrix is not Hermitian: max deviation {deviation:.3e} "
                f"exceeds {HERMITICITY_TOL}"
            )
        trace = complex(np.trace(m))
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidStateError(
                f"trace deviates from 1 by {abs(trace - 1.0):.3e} "
                f"(beyond {TRACE_TOL})"
            )
        min_eig = float(eigvals_hermitian(m, HERMITICITY_TOL)[0])
        if min_eig < -PSD_TOL:
            raise InvalidStateError(
                f"matrix is not positive semidefinite: "
                f"min eigenvalue {min_eig:.3e}"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        """Total Hilbert-space dimension dim_a * dim_b."""
        return self.dim_a * self.dim_b


# Support of the six basis states: flat ket indices of the paired product
# kets and the relative sign, in order |11>/|22>, |12>/|23>, |13>/|21>.
_BELL_SUPPORT = (
    (0, 4, +1.0),
    (0, 4, -1.0),
    (1, 5, +1.0),
    (1, 5, -1.0),
    (2, 3, +1.0),
    (2, 3, -1.0),
)


def bell_state(k: int) -> np.ndarray:
    """k-th (1-based) maximally entangled basis state of the 2x3 system.

    The six unit kets (|11> +- |22>)/sqrt(2), (|12> +- |23>)/sqrt(2),
    (|13> +- |21>)/sqrt(2) form an orthonormal basis of C^6.
    """
    if not 1 <= k <= 6:
        raise ValueError(f"basis index must be in 1..6, got {k}")
    i, j, sign = _BELL_SUPPORT[k - 1]
    ket = np.zeros(6, dtype=np.complex128)
    ket[i] = 1 / math.sqrt(2)
    ket[j] = sign / math.sqrt(2)
    return ket


def bell_decomposable(params) -> BipartiteDensity:
    """Mixture of the six basis states with the given probabilities."""
    params = as_bd_params(params)
    rho = np.zeros((6, 6), dtype=np.complex128)
    for k, weight in enumerate(params.p, start=1):
        ket = bell_state(k)
        rho += weight * np.outer(ket, ket.conj())
    return BipartiteDensity(2, 3, rho)


def maximally_mixed(dim_a: int, dim_b: int) -> BipartiteDensity:
    """Identity over the composite dimension: I / (dim_a * dim_b)."""
    if dim_a < 1 or dim_b < 1:
        raise DimensionError("subsystem dimensions must be positive")
    d = dim_a * dim_b
    return BipartiteDensity(dim_a, dim_b, np.eye(d, dtype=np.complex128) / d)


def _random_density_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Full-rank density matrix g g^H / tr with a complex Gaussian g."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_density(dim_a: int, dim_b: int, seed: int) -> BipartiteDensity:
    """Seeded random full-rank density matrix on the composite system.

    Same seed, same state; different seeds give independent draws.
    """
    if dim_a < 1 or dim_b < 1:
        raise DimensionError("subsystem dimensions must be positive")
    rng = np.random.default_rng(seed)
    return BipartiteDensity(dim_a, dim_b, _random_density_matrix(rng, dim_a * dim_b))


def random_separable(dim_a: int, dim_b: int, terms: int, seed: int) -> BipartiteDensity:
    """Seeded random separable state: a convex mixture of product states.

    Mixture weights are normalized exponential draws; each term is a
    Kronecker product of independent single-party densities, so the
    result is separable by construction.
    """
    if dim_a < 1 or dim_b < 1:
        raise DimensionError("subsystem dimensions must be positive")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    rng = np.random.default_rng(seed)
    weights = rng.exponential(size=terms)
    weights /= weights.sum()
    d = dim_a * dim_b
    rho = np.zeros((d, d), dtype=np.complex128)
    for w in weights:
        rho += w * np.kron(
            _random_density_matrix(rng, dim_a),
            _random_density_matrix(rng, dim_b),
        )
    return BipartiteDensity(dim_a, dim_b, rho)
