"""Exception types shared across the library."""


class SpectralError(Exception):
    """Numerical failure inside an eigenvalue-based routine."""


class NotHermitianError(SpectralError):
    """Input matrix deviates from its conjugate transpose beyond tolerance."""


class NoConvergenceError(SpectralError):
    """The underlying eigensolver failed to converge."""


class NotPSDError(SpectralError):
    """Matrix has an eigenvalue below the negative tolerance floor."""


class NotNormalizedError(SpectralError):
    """Matrix trace is not 1 within tolerance where a density matrix is required."""


class DimensionMismatchError(ValueError):
    """Alphabet parameters and Fourier expansion disagree on their dimensions."""


class NegativeCoefficientError(ValueError):
    """A Fourier coefficient is genuinely negative.

    Signals that the requested (alphabet size, expansion order, shape
    parameter) combination lies outside the regime where the discrete
    alphabet construction is defined.
    """

    def __init__(self, message, m=None, level=None, shape_param=None, order=None, value=None):
        super().__init__(message)
        self.m = m
        self.level = level
        self.shape_param = shape_param
        self.order = order
        self.value = value
