//! Numerical semi-Riemannian geometry of the generalised Berger metric
//! families on the 3-sphere S³ and its dual Σ³ ⊂ C².
//!
//! The crate computes, for any weights (λ, μ, ν) and signature (ε₁, ε₂, ε₃):
//!
//! - the group structure and left-invariant frames of both spaces
//!   ([`ambient`]),
//! - the metric family and causal classification ([`metric`]),
//! - structure constants, the Levi-Civita connection via the Koszul
//!   formula, frame sectional curvatures and their sign regions
//!   ([`connection`]),
//! - the torus families T²_θ ⊂ S³ and U²_θ ⊂ Σ³ with fundamental forms,
//!   mean curvature and a constant-mean-curvature solver ([`torus`]),
//! - a finite-difference oracle that re-derives all of the closed forms
//!   numerically and reports per-check deviations ([`verify`]).

pub mod ambient;
pub mod connection;
pub mod error;
pub mod metric;
pub mod torus;
pub mod verify;

pub use ambient::{
    euclidean_ip, frame_at, group_inv, group_mul, left_translate, AmbientPoint, FrameVectors,
    SpaceKind, TangentVector, ON_MANIFOLD_TOL,
};
pub use connection::{
    closed_form_connection, closed_form_curvature, curvature_numerator,
    curvature_numerator_with_table, koszul_connection, sectional_curvature, sign_region_boundary,
    sign_region_check, structure_constants, ConnectionTable, PlaneKind, RegionClass,
    StructureConstants, REGION_BOUNDARY_TOL,
};
pub use error::GeomError;
pub use metric::{
    berger_ip, causal_character, BergerParams, CausalClass, ModelSpec, Sign, Signature,
    CAUSAL_TOL,
};
pub use torus::{
    cmc_solve, cmc_solve_bisection, embed, first_fundamental_form,
    first_fundamental_form_via_metric, gram_schmidt_basis, h_norm_closed_form, mean_curvature,
    partials, second_ff_alpha, second_ff_alpha_ambient, second_ff_beta, CmcSolution,
    FundamentalForm, SurfaceGeometry, TorusPartials, TorusPoint, YzComponents,
};
pub use verify::{
    fd_h_norm, fd_partial, fd_second_partial_alpha, run_suite, CheckRecord, FdConfig, PartialDir,
    Sampler,
    VerificationReport,
};
