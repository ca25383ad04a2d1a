"""Holevo rates, mode efficiency, and the lossy-channel capacity baseline.

The Holevo quantity of a uniform pure-state ensemble is the entropy of its
normalized Gram matrix, so every rate here is an entropy of something built
in :mod:`cfsk.alphabet`.  Mode efficiency divides that quantity by the
number of parallel modes the alphabet occupies: M for frequency keying, 1
for phase keying, 2L+1 for the discrete alphabet.
"""

import math
from dataclasses import dataclass

import numpy as np

from .alphabet import (
    CfskParams,
    DcfskParams,
    FourierExpansion,
    GramMatrix,
    PhaseOffsetMode,
    PskParams,
    fourier_coefficients,
    gram_cfsk,
    gram_dcfsk,
    gram_psk,
)
from .spectral import von_neumann_entropy


@dataclass(frozen=True)
class RateReport:
    """Holevo quantity of one alphabet instance and its per-mode bookkeeping.

    ``ratio`` is rate_per_mode / capacity(photons_per_mode) and is ``None``
    at zero energy, where the quotient is undefined.
    """

    holevo_bits: float
    modes: int
    photons_per_mode: float
    total_photons: float
    rate_per_mode: float
    capacity: float
    ratio: float | None


def holevo_rate(gram) -> float:
    """Holevo quantity, in bits, of a uniform ensemble with this Gram matrix."""
    entries = gram.entries if isinstance(gram, GramMatrix) else np.asarray(gram, dtype=complex)
    return von_neumann_entropy(entries / entries.shape[0])


def capacity(photons_per_mode: float) -> float:
    """Single-mode lossy bosonic channel capacity at mean photon number n."""
    n = float(photons_per_mode)
    if n < 0:
        raise ValueError(f"photon number must be nonnegative; got {n}")
    if n == 0:
        return 0.0
    return (n + 1.0) * math.log2(n + 1.0) - n * math.log2(n)


def _report(chi: float, modes: int, n: float) -> RateReport:
    cap = capacity(n)
    rate = chi / modes
    return RateReport(
        holevo_bits=chi,
        modes=modes,
        photons_per_mode=n,
        total_photons=modes * n,
        rate_per_mode=rate,
        capacity=cap,
        ratio=None if n == 0 else rate / cap,
    )


def rate_cfsk(M: int, delta_theta: float, delta_omega_t: float, photons_per_mode: float) -> RateReport:
    """Mode efficiency of the frequency-keyed alphabet.

    The alphabet occupies M distinct frequency modes, so a per-mode budget
    of n photons allows M*n photons per signal.
    """
    params = CfskParams(M, delta_theta, delta_omega_t, M * photons_per_mode)
    return _report(holevo_rate(gram_cfsk(params)), M, photons_per_mode)


def rate_psk(M: int, photons_per_mode: float) -> RateReport:
    """Mode efficiency of phase keying, which fits in a single mode."""
    params = PskParams(M, photons_per_mode)
    return _report(holevo_rate(gram_psk(params)), 1, photons_per_mode)


def rate_dcfsk(
    M: int,
    L: int,
    delta_theta: float,
    shape_param: float,
    photons_per_mode: float,
    phase_offset_mode: PhaseOffsetMode = PhaseOffsetMode.CFSK_MATCHED,
    explicit_phase_step: float | None = None,
    expansion: FourierExpansion | None = None,
) -> RateReport:
    """Mode efficiency of the discrete alphabet on its 2L+1 modes.

    A precomputed ``expansion`` may be passed to avoid re-running the
    quadrature inside energy sweeps.
    """
    modes = 2 * L + 1
    if expansion is None:
        expansion = fourier_coefficients(M, L, shape_param)
    params = DcfskParams(
        M=M,
        L=L,
        delta_theta=delta_theta,
        shape_param=shape_param,
        total_photons=modes * photons_per_mode,
        phase_offset_mode=phase_offset_mode,
        explicit_phase_step=explicit_phase_step,
    )
    return _report(holevo_rate(gram_dcfsk(params, expansion)), modes, photons_per_mode)
