"""Coherent-state keying alphabets and their Gram matrices.

Three alphabet families are supported:

* frequency-shift keying with rectangular pulses (``CfskParams``), where
  consecutive signals differ by a phase step and a dimensionless frequency
  step,
* plain phase-shift keying (``PskParams``), the zero-frequency-step special
  case with phases spread uniformly around the circle,
* a discrete narrowband emulation (``DcfskParams``) that reproduces the
  frequency-keyed Gram matrix with a small number of single-mode coherent
  states whose energy fractions come from a truncated Fourier expansion of
  the sinc pulse shape.

All discrimination and rate figures of merit downstream depend on the
states only through the Gram matrix of pairwise overlaps, so this module is
the single place where any physics enters.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad
from scipy.linalg import toeplitz

from .errors import DimensionMismatchError, NegativeCoefficientError

TWO_PI = 2.0 * np.pi

# Coefficients in [-NEGATIVE_COEFF_TOL, 0) are treated as quadrature noise
# and clamped; anything below is a genuine regime violation.
NEGATIVE_COEFF_TOL = 1e-12

_QUAD_OPTS = dict(epsabs=1e-12, epsrel=1e-11, limit=500)


def sinc(x: float) -> float:
    """sin(x)/x with the removable singularity filled by its limit."""
    if abs(x) < 1e-4:
        # series branch: avoids the 0/0 form and is exact to double precision
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return np.sin(x) / x


def _check_angle(name, value):
    if not 0.0 <= value < TWO_PI:
        raise ValueError(f"{name} must lie in [0, 2*pi); got {value}")


def _check_size(m):
    if int(m) != m or m < 2:
        raise ValueError(f"alphabet size must be an integer >= 2; got {m}")


def _check_photons(name, value):
    if value < 0:
        raise ValueError(f"{name} must be nonnegative; got {value}")


@dataclass(frozen=True)
class CfskParams:
    """Frequency-shift keyed alphabet of M rectangular coherent pulses.

    ``delta_theta`` is the per-index phase increment and ``delta_omega_t``
    the per-index frequency increment times the pulse duration; only this
    product ever enters an overlap, so the two factors are not stored
    separately.  ``total_photons`` is the mean photon number of each signal.
    Both angle parameters are restricted to [0, 2*pi); values outside are
    rejected rather than wrapped.
    """

    M: int
    delta_theta: float
    delta_omega_t: float
    total_photons: float

    def __post_init__(self):
        _check_size(self.M)
        _check_photons("total_photons", self.total_photons)
        _check_angle("delta_theta", self.delta_theta)
        _check_angle("delta_omega_t", self.delta_omega_t)


@dataclass(frozen=True)
class PskParams:
    """Phase-shift keyed alphabet: M single-mode states with phases 2*pi*m/M."""

    M: int
    photons: float

    def __post_init__(self):
        _check_size(self.M)
        _check_photons("photons", self.photons)


class PhaseOffsetMode(Enum):
    """How the per-index phase step of the discrete alphabet is chosen.

    CFSK_MATCHED adds half the shape parameter to the base step, which is
    exactly the phase the rectangular pulse contributes per index, so the
    emulated Gram matrix converges to the frequency-keyed one.  PAPER_HALF_PI
    adds a fixed pi/2 instead (correct only when the shape parameter equals
    pi).  EXPLICIT uses a caller-supplied step verbatim.
    """

    CFSK_MATCHED = "cfsk-matched"
    PAPER_HALF_PI = "paper-half-pi"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class DcfskParams:
    """Discrete narrowband alphabet on 2L+1 modes emulating frequency keying.

    ``shape_param`` plays the role of the frequency step times duration of
    the rectangular-pulse alphabet being emulated; it parameterizes the sinc
    shape whose Fourier expansion supplies the per-mode energy fractions.
    """

    M: int
    L: int
    delta_theta: float
    shape_param: float
    total_photons: float
    phase_offset_mode: PhaseOffsetMode = PhaseOffsetMode.CFSK_MATCHED
    explicit_phase_step: float | None = None

    def __post_init__(self):
        _check_size(self.M)
        if int(self.L) != self.L or self.L < 0:
            raise ValueError(f"L must be an integer >= 0; got {self.L}")
        _check_photons("total_photons", self.total_photons)
        if self.phase_offset_mode is PhaseOffsetMode.EXPLICIT:
            if self.explicit_phase_step is None:
                raise ValueError("EXPLICIT phase offset mode requires explicit_phase_step")
        elif self.explicit_phase_step is not None:
            raise ValueError("explicit_phase_step is only meaningful in EXPLICIT mode")

    @property
    def modes(self) -> int:
        return 2 * self.L + 1

    def phase_step(self) -> float:
        """Resolved per-index phase increment of the discrete alphabet."""
        if self.phase_offset_mode is PhaseOffsetMode.CFSK_MATCHED:
            return self.delta_theta + 0.5 * self.shape_param
        if self.phase_offset_mode is PhaseOffsetMode.PAPER_HALF_PI:
            return self.delta_theta + 0.5 * np.pi
        return float(self.explicit_phase_step)


@dataclass(frozen=True)
class FourierExpansion:
    """Truncated Fourier expansion of the sinc pulse shape.

    ``coeffs`` holds c_ell for ell = -L..L (index ell + L); ``fractions``
    are the coefficients normalized to unit sum, used as per-mode energy
    fractions; ``s_zero`` is the normalizer, the expansion evaluated at zero.
    """

    M: int
    L: int
    delta: float
    coeffs: np.ndarray
    fractions: np.ndarray
    s_zero: float

    def __post_init__(self):
        for name in ("coeffs", "fractions"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def orders(self) -> np.ndarray:
        return np.arange(-self.L, self.L + 1)


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian positive-semidefinite matrix of pairwise state overlaps."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"Gram matrix must be square; got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _cfsk_generator(d, delta_theta, delta_omega_t, total_photons) -> complex:
    """Toeplitz generator of the rectangular-pulse Gram matrix.

    Total over all real arguments; the d = 0 value is exactly 1.
    """
    half = 0.5 * d * delta_omega_t
    cross = np.exp(1j * (d * delta_theta + half)) * sinc(half)
    return complex(np.exp(-total_photons * (1.0 - cross)))


def _hermitian_toeplitz(column) -> np.ndarray:
    # build the lower triangle from the column and the upper one from its
    # conjugate so Hermiticity and the unit diagonal hold exactly
    col = np.asarray(column, dtype=complex)
    return toeplitz(col, np.conj(col))


def cfsk_overlap(params: CfskParams, d: int) -> complex:
    """Overlap between two signals whose indices differ by d."""
    if abs(d) >= params.M:
        raise ValueError(f"index difference must satisfy |d| < M; got d={d}, M={params.M}")
    return _cfsk_generator(d, params.delta_theta, params.delta_omega_t, params.total_photons)


def gram_cfsk(params: CfskParams) -> GramMatrix:
    """Gram matrix of the frequency-shift keyed alphabet (Toeplitz by construction)."""
    col = [
        _cfsk_generator(d, params.delta_theta, params.delta_omega_t, params.total_photons)
        for d in range(params.M)
    ]
    return GramMatrix(_hermitian_toeplitz(col))


def gram_psk(params: PskParams) -> GramMatrix:
    """Circulant Gram matrix of the phase-shift keyed alphabet."""
    m, n = params.M, params.photons
    col = np.empty(m, dtype=complex)
    for d in range(m):
        if 2 * d == m:
            z = -1.0 + 0.0j  # exact antipodal phase keeps the matrix circulant to the bit
        else:
            s = d if 2 * d < m else d - m
            z = np.exp(2j * np.pi * s / m)
        col[d] = np.exp(-n * (1.0 - z))
    return GramMatrix(_hermitian_toeplitz(col))


def fourier_coefficients(M: int, L: int, shape_param: float) -> FourierExpansion:
    """Expand the sinc pulse shape on the phase grid of an M-ary alphabet.

    Coefficients are computed by adaptive quadrature over one period of the
    expansion.  Raises ``NegativeCoefficientError`` when a coefficient is
    negative beyond quadrature noise, which means the (M, L, shape_param)
    combination cannot supply valid energy fractions.
    """
    _check_size(M)
    if int(L) != L or L < 0:
        raise ValueError(f"L must be an integer >= 0; got {L}")
    delta = np.pi / (M - 1)
    width = np.pi / delta  # equals M - 1

    def shape(t):
        return sinc(0.5 * t * shape_param)

    coeffs = np.empty(2 * L + 1)
    for ell in range(-L, L + 1):
        freq = ell * delta
        re = quad(lambda t: shape(t) * np.cos(freq * t), -width, width, **_QUAD_OPTS)[0]
        im = quad(lambda t: -shape(t) * np.sin(freq * t), -width, width, **_QUAD_OPTS)[0]
        if abs(im) > 1e-9:
            raise ValueError(f"coefficient c_{ell} has unexpected imaginary part {im}")
        coeffs[ell + L] = delta / TWO_PI * re

    worst = int(np.argmin(coeffs))
    if coeffs[worst] < -NEGATIVE_COEFF_TOL:
        ell = worst - L
        raise NegativeCoefficientError(
            f"Fourier coefficient c_{ell} = {coeffs[worst]:.6g} is negative for "
            f"M={M}, L={L}, shape_param={shape_param}",
            m=M, level=L, shape_param=shape_param, order=ell, value=coeffs[worst],
        )
    coeffs = np.where(coeffs < 0.0, 0.0, coeffs)
    s_zero = float(coeffs.sum())
    if s_zero <= 0.0:
        raise NegativeCoefficientError(
            f"expansion degenerates to zero for M={M}, L={L}, shape_param={shape_param}",
            m=M, level=L, shape_param=shape_param,
        )
    return FourierExpansion(
        M=M, L=L, delta=delta, coeffs=coeffs, fractions=coeffs / s_zero, s_zero=s_zero
    )


def gram_dcfsk(params: DcfskParams, expansion: FourierExpansion) -> GramMatrix:
    """Gram matrix of the discrete alphabet built from an expansion's fractions."""
    if params.M != expansion.M or params.L != expansion.L:
        raise DimensionMismatchError(
            f"params (M={params.M}, L={params.L}) and expansion "
            f"(M={expansion.M}, L={expansion.L}) disagree"
        )
    step = params.phase_step()
    orders = expansion.orders()
    col = np.empty(params.M, dtype=complex)
    col[0] = 1.0
    for d in range(1, params.M):
        mode_sum = np.exp(1j * d * expansion.delta * orders) @ expansion.fractions
        cross = np.exp(1j * d * step) * mode_sum
        col[d] = np.exp(-params.total_photons * (1.0 - cross))
    return GramMatrix(_hermitian_toeplitz(col))
