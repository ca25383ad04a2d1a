"""Performance analysis of coherent-state keying alphabets.

Builds Gram matrices for phase-keyed, frequency-keyed, and discrete
narrowband alphabets, and evaluates their discrimination performance
(square-root measurement, optimality test, success-probability bounds) and
communication performance (Holevo quantity, mode efficiency, capacity
ratio).
"""

from .alphabet import (
    CfskParams,
    DcfskParams,
    FourierExpansion,
    GramMatrix,
    PhaseOffsetMode,
    PskParams,
    cfsk_overlap,
    fourier_coefficients,
    gram_cfsk,
    gram_dcfsk,
    gram_psk,
    sinc,
)
from .discrimination import (
    DiscriminationReport,
    SentisBounds,
    discrimination_report,
    helstrom_binary,
    sentis_bounds,
    srm_optimality_gap,
    srm_success,
)
from .errors import (
    DimensionMismatchError,
    NegativeCoefficientError,
    NoConvergenceError,
    NotHermitianError,
    NotNormalizedError,
    NotPSDError,
    SpectralError,
)
from .rates import RateReport, capacity, holevo_rate, rate_cfsk, rate_dcfsk, rate_psk
from .spectral import (
    HermitianSpectrum,
    StructureCheck,
    hermitian_eig,
    matrix_sqrt,
    structure_check,
    von_neumann_entropy,
)
from .tuning import Objective, TuningResult, grid_optimize, tuned_cfsk_params

__version__ = "0.1.0"

__all__ = [
    "CfskParams",
    "DcfskParams",
    "DimensionMismatchError",
    "DiscriminationReport",
    "FourierExpansion",
    "GramMatrix",
    "HermitianSpectrum",
    "NegativeCoefficientError",
    "NoConvergenceError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotPSDError",
    "Objective",
    "PhaseOffsetMode",
    "PskParams",
    "RateReport",
    "SentisBounds",
    "SpectralError",
    "StructureCheck",
    "TuningResult",
    "capacity",
    "cfsk_overlap",
    "discrimination_report",
    "fourier_coefficients",
    "gram_cfsk",
    "gram_dcfsk",
    "gram_psk",
    "grid_optimize",
    "helstrom_binary",
    "hermitian_eig",
    "holevo_rate",
    "matrix_sqrt",
    "rate_cfsk",
    "rate_dcfsk",
    "rate_psk",
    "sentis_bounds",
    "sinc",
    "srm_optimality_gap",
    "srm_success",
    "structure_check",
    "tuned_cfsk_params",
    "von_neumann_entropy",
]
