"""Dense Hermitian spectral machinery: eigendecomposition, matrix square
root, von Neumann entropy, and Toeplitz/circulant structure detection."""

from dataclasses import dataclass

import numpy as np

from .alphabet import GramMatrix
from .errors import (
    NoConvergenceError,
    NotHermitianError,
    NotNormalizedError,
    NotPSDError,
)

HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
TRACE_TOL = 1e-10
STRUCTURE_TOL = 1e-12
# eigenvalues below this floor contribute exactly zero to the entropy
ENTROPY_EIG_FLOOR = 1e-15


def _as_matrix(a) -> np.ndarray:
    if isinstance(a, GramMatrix):
        return a.entries
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix; got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class HermitianSpectrum:
    """Eigenvalues in descending order plus the matching unitary of columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(a) -> HermitianSpectrum:
    """Spectral decomposition of a Hermitian matrix.

    The input is symmetrized as (A + A^dagger)/2 before decomposition;
    asymmetry beyond tolerance raises ``NotHermitianError``.
    """
    arr = _as_matrix(a)
    asym = np.max(np.abs(arr - arr.conj().T)) if arr.size else 0.0
    if asym > HERMITIAN_TOL:
        raise NotHermitianError(f"matrix deviates from Hermitian by {asym:.3e}")
    sym = 0.5 * (arr + arr.conj().T)
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigendecomposition failed: {exc}") from exc
    return HermitianSpectrum(eigenvalues=w[::-1].copy(), eigenvectors=v[:, ::-1].copy())


def matrix_sqrt(a) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-PSD_TOL, 0) are treated as solver noise and clamped to
    zero; anything lower raises ``NotPSDError``.
    """
    spec = hermitian_eig(a)
    smallest = spec.eigenvalues[-1]
    if smallest < -PSD_TOL:
        raise NotPSDError(f"matrix is not positive semidefinite (min eigenvalue {smallest:.3e})")
    roots = np.sqrt(np.clip(spec.eigenvalues, 0.0, None))
    v = spec.eigenvectors
    out = (v * roots) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def von_neumann_entropy(a) -> float:
    """Entropy, in bits, of a unit-trace Hermitian positive-semidefinite matrix."""
    arr = _as_matrix(a)
    trace = np.trace(arr)
    if abs(trace - 1.0) > TRACE_TOL:
        raise NotNormalizedError(f"trace must be 1 within {TRACE_TOL}; got {trace}")
    spec = hermitian_eig(arr)
    if spec.eigenvalues[-1] < -PSD_TOL:
        raise NotPSDError(
            f"matrix is not positive semidefinite (min eigenvalue {spec.eigenvalues[-1]:.3e})"
        )
    lams = spec.eigenvalues[spec.eigenvalues > ENTROPY_EIG_FLOOR]
    h = float(-np.sum(lams * np.log2(lams)))
    return max(h, 0.0)


@dataclass(frozen=True)
class StructureCheck:
    is_toeplitz: bool
    is_circulant: bool
    max_toeplitz_dev: float
    max_circulant_dev: float


def structure_check(a) -> StructureCheck:
    """Measure how far a square matrix is from Toeplitz and circulant form.

    Deviations are the largest entry spread along each (wrapped) diagonal;
    flags compare them against a fixed threshold.
    """
    arr = _as_matrix(a)
    m = arr.shape[0]
    toeplitz_dev = 0.0
    for offset in range(-(m - 1), m):
        diag = np.diagonal(arr, offset)
        toeplitz_dev = max(toeplitz_dev, float(np.max(np.abs(diag - diag[0]))))
    circulant_dev = 0.0
    idx = np.arange(m)
    for shift in range(m):
        wrapped = arr[idx, (idx + shift) % m]
        circulant_dev = max(circulant_dev, float(np.max(np.abs(wrapped - wrapped[0]))))
    return StructureCheck(
        is_toeplitz=toeplitz_dev <= STRUCTURE_TOL,
        is_circulant=circulant_dev <= STRUCTURE_TOL,
        max_toeplitz_dev=toeplitz_dev,
        max_circulant_dev=circulant_dev,
    )
