"""Grid search over the two keying angles, with local refinement.

The externally published optimal angle pairs for the frequency-keyed
alphabet are not available here, so figure-level comparisons use the
optimum of a deterministic coarse-to-fine search instead: a uniform grid
over [0, 2*pi)^2 followed by per-axis golden-section refinement of the best
cell.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .alphabet import TWO_PI, CfskParams, gram_cfsk
from .discrimination import sentis_bounds, srm_success
from .rates import holevo_rate

REFINE_TOL = 1e-6
MAX_SWEEPS = 100
# largest double strictly below 2*pi, so refined angles stay in range
_ANGLE_MAX = np.nextafter(TWO_PI, 0.0)

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


class Objective(Enum):
    SRM_SUCCESS = "srm-success"
    HOLEVO_RATE = "holevo-rate"
    UPPER_BOUND = "upper-bound"


@dataclass(frozen=True)
class TuningResult:
    best_delta_theta: float
    best_delta_omega_t: float
    objective_value: float
    objective_kind: Objective
    grid_resolution: int
    refinement_iterations: int


def _objective(M, total_photons, kind):
    def evaluate(delta_theta, delta_omega_t):
        gram = gram_cfsk(CfskParams(M, delta_theta, delta_omega_t, total_photons))
        if kind is Objective.SRM_SUCCESS:
            return srm_success(gram)[0]
        if kind is Objective.HOLEVO_RATE:
            return holevo_rate(gram)
        return sentis_bounds(gram).p_upper

    return evaluate


def _golden_max(fn, lo, hi, tol):
    """Golden-section maximization on [lo, hi]; returns (x, fn(x))."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = fn(x1), fn(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = fn(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = fn(x1)
    x = 0.5 * (a + b)
    return x, fn(x)


def grid_optimize(
    M: int,
    total_photons: float,
    objective: Objective = Objective.SRM_SUCCESS,
    resolution: int = 64,
) -> TuningResult:
    """Maximize an objective over the angle pair (delta_theta, delta_omega_t).

    Scans a resolution x resolution uniform grid over [0, 2*pi)^2, then
    refines the best cell by coordinate descent with a golden-section line
    search per axis.  Deterministic: grid ties break toward the smallest
    (delta_theta, delta_omega_t), and refinement never replaces the grid
    optimum with a worse point.
    """
    if resolution < 8:
        raise ValueError(f"resolution must be at least 8; got {resolution}")
    evaluate = _objective(M, total_photons, objective)
    step = TWO_PI / resolution
    angles = step * np.arange(resolution)

    best_theta, best_omega, best_value = 0.0, 0.0, -np.inf
    for theta in angles:
        for omega in angles:
            value = evaluate(theta, omega)
            if value > best_value:
                best_theta, best_omega, best_value = theta, omega, value

    theta, omega, value = best_theta, best_omega, best_value
    sweeps = 0
    for sweeps in range(1, MAX_SWEEPS + 1):
        theta_new, _ = _golden_max(
            lambda x: evaluate(x, omega),
            max(0.0, theta - step),
            min(_ANGLE_MAX, theta + step),
            REFINE_TOL,
        )
        omega_new, value_new = _golden_max(
            lambda x: evaluate(theta_new, x),
            max(0.0, omega - step),
            min(_ANGLE_MAX, omega + step),
            REFINE_TOL,
        )
        moved = max(abs(theta_new - theta), abs(omega_new - omega))
        theta, omega, value = theta_new, omega_new, value_new
        if moved < REFINE_TOL:
            break
    if value < best_value:
        theta, omega, value = best_theta, best_omega, best_value

    return TuningResult(
        best_delta_theta=theta,
        best_delta_omega_t=omega,
        objective_value=evaluate(theta, omega),
        objective_kind=objective,
        grid_resolution=resolution,
        refinement_iterations=sweeps,
    )


def tuned_cfsk_params(
    M: int,
    total_photons: float,
    objective: Objective = Objective.SRM_SUCCESS,
    resolution: int = 64,
) -> CfskParams:
    """Convenience wrapper returning ready-to-use alphabet parameters."""
    result = grid_optimize(M, total_photons, objective, resolution)
    return CfskParams(M, result.best_delta_theta, result.best_delta_omega_t, total_photons)
