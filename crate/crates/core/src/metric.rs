//! The generalised Berger metric family and causal classification.
//!
//! At a point p the metric with weights (λ, μ, ν) and signature
//! (ε₁, ε₂, ε₃) evaluates as
//!
//! ```text
//! g_p(A, B) = ε₁λ²⟨p⁻¹A,(i,0)⟩⟨p⁻¹B,(i,0)⟩ + ε₂μ²⟨p⁻¹A,(0,−1)⟩⟨p⁻¹B,(0,−1)⟩
//!           + ε₃ν²⟨p⁻¹A,(0,i)⟩⟨p⁻¹B,(0,i)⟩  + ⟨p⁻¹A,(1,0)⟩⟨p⁻¹B,(1,0)⟩,
//! ```
//!
//! where ⟨,⟩ is the Euclidean product of R⁴ and p⁻¹A is the group
//! translation of the ambient vector A. The trailing normal term makes the
//! form evaluable on arbitrary ambient vectors, which the torus machinery
//! relies on for its orthogonal decompositions.

use crate::ambient::{inv_coords, mul4, AmbientPoint, SpaceKind, TangentVector};
use crate::error::GeomError;

/// Strictly positive metric weights (λ, μ, ν).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BergerParams {
    lambda: f64,
    mu: f64,
    nu: f64,
}

impl BergerParams {
    pub fn new(lambda: f64, mu: f64, nu: f64) -> Result<Self, GeomError> {
        if lambda > 0.0 && mu > 0.0 && nu > 0.0 {
            Ok(Self { lambda, mu, nu })
        } else {
            Err(GeomError::NonPositiveParams { lambda, mu, nu })
        }
    }

    /// λ = μ = ν = 1, the round metric on S³.
    pub fn unit() -> Self {
        Self { lambda: 1.0, mu: 1.0, nu: 1.0 }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// One sign of a metric signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Signature (ε₁, ε₂, ε₃) applied to the λ², μ², ν² terms. The normal
/// direction always carries weight +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    eps: [Sign; 3],
}

impl Signature {
    /// (+, +, +)
    pub const RIEMANNIAN: Self = Self { eps: [Sign::Plus, Sign::Plus, Sign::Plus] };
    /// (−, +, +)
    pub const LORENTZIAN: Self = Self { eps: [Sign::Minus, Sign::Plus, Sign::Plus] };

    pub fn new(e1: Sign, e2: Sign, e3: Sign) -> Self {
        Self { eps: [e1, e2, e3] }
    }

    pub fn eps1(&self) -> f64 {
        self.eps[0].value()
    }

    pub fn eps2(&self) -> f64 {
        self.eps[1].value()
    }

    pub fn eps3(&self) -> f64 {
        self.eps[2].value()
    }

    /// The three signs as reals, indexed by frame order (X, Y, Z).
    pub fn eps(&self) -> [f64; 3] {
        [self.eps1(), self.eps2(), self.eps3()]
    }

    /// Whether closed-form connection/curvature tables exist for this
    /// signature (only (+,+,+) and (−,+,+) are tabulated).
    pub fn is_tabulated(&self) -> bool {
        *self == Self::RIEMANNIAN || *self == Self::LORENTZIAN
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = |s: Sign| if s == Sign::Plus { '+' } else { '-' };
        write!(f, "{},{},{}", c(self.eps[0]), c(self.eps[1]), c(self.eps[2]))
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    /// Parses `"+,+,+"`-style signature flags.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("expected three comma-separated signs, got `{s}`"));
        }
        let mut eps = [Sign::Plus; 3];
        for (slot, part) in eps.iter_mut().zip(&parts) {
            *slot = match part.trim() {
                "+" | "+1" => Sign::Plus,
                "-" | "-1" => Sign::Minus,
                other => return Err(format!("invalid sign `{other}` in `{s}`")),
            };
        }
        Ok(Signature { eps })
    }
}

/// A fully specified model: which space, which weights, which signature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpec {
    pub space: SpaceKind,
    pub params: BergerParams,
    pub signature: Signature,
}

impl ModelSpec {
    pub fn new(space: SpaceKind, params: BergerParams, signature: Signature) -> Self {
        Self { space, params, signature }
    }

    pub fn riemannian(space: SpaceKind, params: BergerParams) -> Self {
        Self::new(space, params, Signature::RIEMANNIAN)
    }

    pub fn lorentzian(space: SpaceKind, params: BergerParams) -> Self {
        Self::new(space, params, Signature::LORENTZIAN)
    }

    /// The four cases with closed-form tables, in the fixed order
    /// (S³,g), (S³,h), (Σ³,g), (Σ³,h), all at unit weights.
    pub fn tabulated_cases() -> Vec<ModelSpec> {
        let u = BergerParams::unit();
        vec![
            ModelSpec::riemannian(SpaceKind::S3, u),
            ModelSpec::lorentzian(SpaceKind::S3, u),
            ModelSpec::riemannian(SpaceKind::Sigma3, u),
            ModelSpec::lorentzian(SpaceKind::Sigma3, u),
        ]
    }

    /// Short stable label, used in verification-report check names.
    pub fn case_label(&self) -> String {
        let sig = if self.signature == Signature::RIEMANNIAN {
            "riemannian"
        } else if self.signature == Signature::LORENTZIAN {
            "lorentzian"
        } else {
            "custom"
        };
        format!("{}_{}", self.space, sig)
    }
}

/// Causal character of a tangent vector under a semi-Riemannian metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Timelike,
    Lightlike,
    Spacelike,
}

impl std::fmt::Display for CausalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CausalClass::Timelike => write!(f, "timelike"),
            CausalClass::Lightlike => write!(f, "lightlike"),
            CausalClass::Spacelike => write!(f, "spacelike"),
        }
    }
}

/// Berger inner product of two ambient vectors at p. Checks that p lies on
/// the model's manifold; the translation by p⁻¹ is only meaningful there.
pub fn berger_ip(
    p: &AmbientPoint,
    a: &TangentVector,
    b: &TangentVector,
    spec: &ModelSpec,
) -> Result<f64, GeomError> {
    p.check_on_manifold(spec.space)?;
    Ok(berger_ip_raw(p, a, b, spec))
}

/// Same bilinear form without the manifold precondition check, for callers
/// holding points that are on-manifold by construction.
pub(crate) fn berger_ip_raw(
    p: &AmbientPoint,
    a: &TangentVector,
    b: &TangentVector,
    spec: &ModelSpec,
) -> f64 {
    let pi = inv_coords(p).coords();
    let ta = mul4(spec.space, pi, a.components());
    let tb = mul4(spec.space, pi, b.components());
    let w = spec.params;
    let [e1, e2, e3] = spec.signature.eps();
    // ⟨v,(i,0)⟩ = v2, ⟨v,(0,−1)⟩ = −v3, ⟨v,(0,i)⟩ = v4, ⟨v,(1,0)⟩ = v1.
    e1 * w.lambda() * w.lambda() * ta[1] * tb[1]
        + e2 * w.mu() * w.mu() * ta[2] * tb[2]
        + e3 * w.nu() * w.nu() * ta[3] * tb[3]
        + ta[0] * tb[0]
}

/// Classifies `a` by the sign of its squared Berger norm: negative is
/// timelike, zero (but a ≠ 0) lightlike, everything else spacelike.
/// Expects p on the model's manifold.
pub fn causal_character(
    p: &AmbientPoint,
    a: &TangentVector,
    spec: &ModelSpec,
    tol: f64,
) -> CausalClass {
    let q = berger_ip_raw(p, a, a, spec);
    if q < -tol {
        CausalClass::Timelike
    } else if q.abs() <= tol && !a.is_zero() {
        CausalClass::Lightlike
    } else {
        CausalClass::Spacelike
    }
}

/// Default tolerance for the lightlike boundary in causal classification.
pub const CAUSAL_TOL: f64 = 1e-12;
