"""Exception types shared across the package."""


class SepscanError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(SepscanError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class NotHermitianError(SepscanError, ValueError):
    """A matrix required to be Hermitian deviates beyond tolerance."""

    def __init__(self, deviation: float, tolerance: float):
        self.deviation = deviation
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: max |m - m^H| entry {deviation:.3e} "
            f"exceeds tolerance {tolerance:.3e}"
        )


class InvalidStateError(SepscanError, ValueError):
    """A matrix violates a density-matrix invariant."""


class InvalidSimplexError(SepscanError, ValueError):
    """A probability vector is not a valid point on the 5-simplex."""


class ScanConfigError(SepscanError, ValueError):
    """A grid-scan configuration is unusable."""


class InternalConsistencyError(SepscanError, RuntimeError):
    """The closed-form and numeric evaluation routes disagree."""
