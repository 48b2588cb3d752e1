//! Error type shared by all modules.

use crate::ambient::SpaceKind;
use crate::metric::Signature;

/// Everything that can go wrong in a geometric computation.
///
/// The variants map one-to-one onto the stable machine-readable codes
/// returned by [`GeomError::code`], which the CLI emits in its JSON output.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    /// Base point does not satisfy the manifold equation within tolerance.
    #[error("point is off {space} by {residual:.3e} (tolerance {tolerance:.1e})")]
    OffManifold {
        space: SpaceKind,
        residual: f64,
        tolerance: f64,
    },

    /// Metric weights must be strictly positive.
    #[error("metric weights must be positive, got lambda={lambda}, mu={mu}, nu={nu}")]
    NonPositiveParams { lambda: f64, mu: f64, nu: f64 },

    /// No closed-form table is shipped for this signature pattern.
    #[error("no closed-form table for signature {signature}")]
    UnsupportedSignature { signature: Signature },

    /// The torus parameter is at or outside its valid open interval, where
    /// the family degenerates to a circle.
    #[error("theta={theta} is outside the torus domain of {space}")]
    DegenerateTorus { space: SpaceKind, theta: f64 },

    /// Gram-Schmidt requires a positive-definite induced metric.
    #[error("induced metric is not positive definite (E={e:.6e}, EG-F^2={det:.6e})")]
    IndefiniteInducedMetric { e: f64, det: f64 },

    /// `EG - F^2` is too close to zero for the trace formula.
    #[error("induced metric is degenerate (EG-F^2={det:.3e})")]
    DegenerateInducedMetric { det: f64 },

    /// A solver hypothesis (mu = nu) does not hold.
    #[error("solver requires mu = nu, got mu={mu}, nu={nu}")]
    HypothesisViolated { mu: f64, nu: f64 },

    /// No torus in the family attains the requested mean curvature.
    #[error("no torus with mean curvature norm {target} (attainable bound {bound})")]
    NoSolution { target: f64, bound: f64 },

    /// A returned solution failed its residual gate.
    #[error("solution residual {residual:.3e} exceeds {tolerance:.1e}")]
    SolutionResidual { residual: f64, tolerance: f64 },

    /// Finite-difference configuration outside its documented range.
    #[error("invalid finite-difference config: {reason}")]
    InvalidFdConfig { reason: String },
}

impl GeomError {
    /// Stable machine-readable code, used verbatim in CLI error records.
    pub fn code(&self) -> &'static str {
        match self {
            GeomError::OffManifold { .. } => "off_manifold",
            GeomError::NonPositiveParams { .. } => "non_positive_params",
            GeomError::UnsupportedSignature { .. } => "unsupported_signature",
            GeomError::DegenerateTorus { .. } => "degenerate_torus",
            GeomError::IndefiniteInducedMetric { .. } => "indefinite_induced_metric",
            GeomError::DegenerateInducedMetric { .. } => "degenerate_induced_metric",
            GeomError::HypothesisViolated { .. } => "hypothesis_violated",
            GeomError::NoSolution { .. } => "no_solution",
            GeomError::SolutionResidual { .. } => "solution_residual",
            GeomError::InvalidFdConfig { .. } => "invalid_fd_config",
        }
    }
}
