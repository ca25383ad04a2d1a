"""Square-root-measurement discrimination figures of merit.

For a uniform ensemble with Gram matrix G, the square-root measurement
succeeds with probability (1/M) sum_m (G^{1/2})_mm^2, is optimal exactly
when the diagonal of G^{1/2} is constant, and the optimal success
probability is sandwiched between (tr G^{1/2}/M)^2 and that same quantity
plus sqrt(gamma_max) * ||q - u||_1.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .alphabet import GramMatrix
from .spectral import hermitian_eig, matrix_sqrt

# Theorem test: the SRM counts as optimal when the diagonal spread of
# G^{1/2} stays below this, matched to the eigensolver noise floor.
OPTIMALITY_TOL = 1e-10


def _entries(gram) -> np.ndarray:
    return gram.entries if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=complex)


@dataclass(frozen=True)
class DiscriminationReport:
    p_srm: float
    sqrt_diag: np.ndarray
    optimality_gap: float
    srm_is_optimal: bool
    p_lower: float
    p_upper: float
    p_upper_raw: float
    gamma_max: float
    q_vector: np.ndarray
    tv_distance_term: float


class SentisBounds(NamedTuple):
    p_lower: float
    p_upper: float
    gamma_max: float
    q_vector: np.ndarray
    tv_distance_term: float


def srm_success(gram) -> tuple[float, np.ndarray]:
    """SRM success probability and the diagonal of the Gram square root."""
    root = matrix_sqrt(_entries(gram))
    diag = np.clip(np.real(np.diagonal(root)), 0.0, None)
    return float(np.mean(diag**2)), diag


def srm_optimality_gap(sqrt_diag) -> tuple[float, bool]:
    """Spread of the square-root diagonal; zero spread certifies SRM optimality."""
    diag = np.asarray(sqrt_diag, dtype=float)
    if diag.size == 0:
        raise ValueError("sqrt_diag must be nonempty")
    if np.any(diag < 0):
        raise ValueError("sqrt_diag entries must be nonnegative")
    gap = float(diag.max() - diag.min())
    return gap, gap <= OPTIMALITY_TOL


def sentis_bounds(gram) -> SentisBounds:
    """Lower and upper bounds on the optimal success probability.

    The upper bound is clamped at 1; the raw expression can exceed it at
    low energy.
    """
    entries = _entries(gram)
    m = entries.shape[0]
    root = matrix_sqrt(entries)
    diag = np.clip(np.real(np.diagonal(root)), 0.0, None)
    trace_root = float(diag.sum())
    p_lower = (trace_root / m) ** 2
    q = diag / trace_root
    tv = float(np.abs(q - 1.0 / m).sum())
    gamma_max = float(hermitian_eig(entries).eigenvalues[0])
    p_upper = min(1.0, p_lower + math.sqrt(gamma_max) * tv)
    return SentisBounds(p_lower, p_upper, gamma_max, q, tv)


def helstrom_binary(overlap_modulus: float) -> float:
    """Optimal success probability for two equiprobable pure states."""
    c = float(overlap_modulus)
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"overlap modulus must lie in [0, 1]; got {c}")
    return 0.5 * (1.0 + math.sqrt(1.0 - c * c))


def discrimination_report(gram) -> DiscriminationReport:
    """All discrimination quantities of one Gram matrix in a single pass."""
    p_srm, diag = srm_success(gram)
    gap, optimal = srm_optimality_gap(diag)
    bounds = sentis_bounds(gram)
    raw = bounds.p_lower + math.sqrt(bounds.gamma_max) * bounds.tv_distance_term
    return DiscriminationReport(
        p_srm=p_srm,
        sqrt_diag=diag,
        optimality_gap=gap,
        srm_is_optimal=optimal,
        p_lower=bounds.p_lower,
        p_upper=bounds.p_upper,
        p_upper_raw=raw,
        gamma_max=bounds.gamma_max,
        q_vector=bounds.q_vector,
        tv_distance_term=bounds.tv_distance_term,
    )
