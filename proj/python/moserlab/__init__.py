"""Hardy Z-function, its zeros and stationary points, spectral sums over zeros."""

from ._core import (
    CoincidenceError,
    CosmoParams,
    CosmoSample,
    DomainError,
    Error,
    IncompleteTable,
    IoError,
    NoIntervalError,
    NumericFault,
    ParseError,
    PoleError,
    PressureInterval,
    SpectralSum,
    StationaryPoint,
    VerificationReport,
    ZeroTable,
    __version__,
    completeness_check,
    density,
    eos_ratio,
    filter_tilde,
    gram_point,
    ingest_zeros,
    partial_sum,
    pressure,
    pressure_direct,
    pressure_interval,
    profile,
    riemann_constant,
    run,
    scan_stationary,
    scan_zeros,
    spectral_sum,
    theorem1_margin,
    theta,
    theta_derivatives,
    verify_asymptotics_ab,
    verify_corollaries,
    verify_eq34_consistency,
    verify_eq9,
    verify_formula1,
    verify_formula1_surrogate,
    verify_theorem1,
    z,
    z_derivatives,
    zeta_half,
    zeta_second_ratio,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
