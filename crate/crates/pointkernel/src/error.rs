use thiserror::Error;

/// Errors across the crate: domain violations, degenerate parameter strata,
/// and failures of the numerical verification machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("wavenumber must be positive, got {0}")]
    InvalidWavenumber(f64),

    #[error("derivative order must be at least 1, got {0}")]
    InvalidOrder(u32),

    #[error("kernel requires t > s, got t = {t}, s = {s}")]
    InvalidTimeOrder { t: f64, s: f64 },

    #[error("point lies on x = 0 or y = 0, where only one-sided limits exist")]
    OnBoundary,

    #[error("couplings lie in the separated stratum (indicator {indicator:.3e}); no connected form exists")]
    NotConnected { indicator: f64 },

    #[error("couplings lie outside the separated stratum (indicator {indicator:.3e}); use the connected form")]
    NotSeparated { indicator: f64 },

    #[error("boundary conditions cannot be generated by the interaction family: {reason}")]
    NotRepresentable { reason: &'static str },

    #[error("connected matrix must have determinant 1, got {det}")]
    NotUnimodular { det: f64 },

    #[error("projective Robin pair must have at least one nonzero component")]
    ZeroPair,

    #[error("stationary-state 2x2 system is numerically singular")]
    SingularSystem,

    #[error("Born recursion input mixes direct and mirror kernels")]
    AlternationViolated,

    #[error("quadrature stopped at error {achieved:.3e}, above the requested {requested:.3e}")]
    QuadratureFailure { achieved: f64, requested: f64 },

    #[error("derivative extrapolation unstable: error estimate {estimate:.3e} exceeds {tolerance:.3e}")]
    ExtrapolationUnstable { estimate: f64, tolerance: f64 },

    #[error("epsilon ladder must be strictly decreasing, positive, and geometric")]
    InvalidLadder,
}

pub type Result<T> = std::result::Result<T, Error>;
