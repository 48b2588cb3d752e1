//! Points, tangent vectors and left-invariant frames of the two ambient
//! group manifolds inside C^2 ≅ R^4.
//!
//! Coordinates follow (z, w) = (x1 + i·x2, x3 + i·x4).
//!
//! The unit sphere S³ = {|z|² + |w|² = 1} carries the multiplication
//!
//! ```text
//! (z1, w1)·(z2, w2) = (z1 z2 − w̄1 w2,  z̄1 w2 + w1 z2),
//! ```
//!
//! its dual Σ³ = {|z|² − |w|² = 1} the multiplication
//!
//! ```text
//! (z1, w1)·(z2, w2) = (z1 z2 + w̄1 w2,  w1 z2 + z̄1 w2).
//! ```
//!
//! Both are groups with neutral element e = (1, 0) and inverse (z̄, −w).
//! All operations here are pure functions on immutable values.

use crate::error::GeomError;
use crate::metric::BergerParams;

/// Tolerance for `on_manifold` precondition checks. Loose enough to accept
/// points perturbed by finite-difference steps of the verification harness.
pub const ON_MANIFOLD_TOL: f64 = 1e-9;

/// Which ambient group manifold a value lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// S³ = {|z|² + |w|² = 1}, isomorphic to SU(2).
    S3,
    /// Σ³ = {|z|² − |w|² = 1}, isomorphic to SL(2, R).
    Sigma3,
}

impl std::fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceKind::S3 => write!(f, "s3"),
            SpaceKind::Sigma3 => write!(f, "sigma3"),
        }
    }
}

/// A point of C² stored as 4 real coordinates.
///
/// The complex reading (z, w) = (x1 + i·x2, x3 + i·x4) is a view; storing
/// raw reals lets one finite-difference oracle treat both spaces uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmbientPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl AmbientPoint {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self { x1, x2, x3, x4 }
    }

    pub fn from_coords(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    /// The neutral element e = (1, 0) of both groups.
    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 0.0)
    }

    /// Signed defect of the manifold equation: |z|²±|w|² − 1.
    pub fn manifold_residual(&self, space: SpaceKind) -> f64 {
        let z2 = self.x1 * self.x1 + self.x2 * self.x2;
        let w2 = self.x3 * self.x3 + self.x4 * self.x4;
        match space {
            SpaceKind::S3 => z2 + w2 - 1.0,
            SpaceKind::Sigma3 => z2 - w2 - 1.0,
        }
    }

    pub fn on_manifold(&self, space: SpaceKind) -> bool {
        self.manifold_residual(space).abs() <= ON_MANIFOLD_TOL
    }

    pub(crate) fn check_on_manifold(&self, space: SpaceKind) -> Result<(), GeomError> {
        let residual = self.manifold_residual(space);
        if residual.abs() <= ON_MANIFOLD_TOL {
            Ok(())
        } else {
            Err(GeomError::OffManifold {
                space,
                residual,
                tolerance: ON_MANIFOLD_TOL,
            })
        }
    }
}

/// A vector of C² ≅ R⁴ attached to a base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub v4: f64,
    pub base: AmbientPoint,
}

impl TangentVector {
    pub fn new(base: AmbientPoint, v1: f64, v2: f64, v3: f64, v4: f64) -> Self {
        Self { v1, v2, v3, v4, base }
    }

    pub fn from_components(base: AmbientPoint, c: [f64; 4]) -> Self {
        Self::new(base, c[0], c[1], c[2], c[3])
    }

    pub fn components(&self) -> [f64; 4] {
        [self.v1, self.v2, self.v3, self.v4]
    }

    pub fn is_zero(&self) -> bool {
        self.v1 == 0.0 && self.v2 == 0.0 && self.v3 == 0.0 && self.v4 == 0.0
    }

    /// Defect of tangency to the given space at the base point: for S³ the
    /// Euclidean product ⟨v, p⟩, for Σ³ the split form Re(z̄ v_z) − Re(w̄ v_w).
    pub fn tangency_residual(&self, space: SpaceKind) -> f64 {
        let p = self.base;
        match space {
            SpaceKind::S3 => p.x1 * self.v1 + p.x2 * self.v2 + p.x3 * self.v3 + p.x4 * self.v4,
            SpaceKind::Sigma3 => {
                p.x1 * self.v1 + p.x2 * self.v2 - p.x3 * self.v3 - p.x4 * self.v4
            }
        }
    }
}

/// The left-invariant orthonormal frame {X, Y, Z} and the normal field N
/// at a common base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameVectors {
    pub x: TangentVector,
    pub y: TangentVector,
    pub z: TangentVector,
    pub n: TangentVector,
}

/// Group product in raw coordinates. The product is R-linear (in fact
/// C-linear) in `q`, so the same formula transports tangent vectors.
pub(crate) fn mul4(space: SpaceKind, p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    let [a, b, c, d] = p;
    let [e, f, g, h] = q;
    // The w-component z̄1 w2 + w1 z2 is common to both multiplication rules.
    let r3 = a * g + b * h + c * e - d * f;
    let r4 = a * h - b * g + c * f + d * e;
    match space {
        SpaceKind::S3 => [
            a * e - b * f - c * g - d * h,
            a * f + b * e - c * h + d * g,
            r3,
            r4,
        ],
        SpaceKind::Sigma3 => [
            a * e - b * f + c * g + d * h,
            a * f + b * e + c * h - d * g,
            r3,
            r4,
        ],
    }
}

/// Product p·q under the space's group rule. Defined on all of C².
pub fn group_mul(p: &AmbientPoint, q: &AmbientPoint, space: SpaceKind) -> AmbientPoint {
    AmbientPoint::from_coords(mul4(space, p.coords(), q.coords()))
}

/// Group inverse (z̄, −w). Only valid on the group itself, hence the
/// manifold precondition.
pub fn group_inv(p: &AmbientPoint, space: SpaceKind) -> Result<AmbientPoint, GeomError> {
    p.check_on_manifold(space)?;
    Ok(inv_coords(p))
}

/// Inverse formula without the manifold check, for callers that already
/// hold an on-manifold point.
pub(crate) fn inv_coords(p: &AmbientPoint) -> AmbientPoint {
    AmbientPoint::new(p.x1, -p.x2, -p.x3, -p.x4)
}

/// Pushes a vector forward by left translation with `p` (the differential
/// of q ↦ p·q, which is the multiplication itself).
pub fn left_translate(p: &AmbientPoint, v: &TangentVector, space: SpaceKind) -> TangentVector {
    TangentVector::from_components(
        group_mul(p, &v.base, space),
        mul4(space, p.coords(), v.components()),
    )
}

/// The orthonormal frame X = λ⁻¹ p·(i,0), Y = μ⁻¹ p·(0,−1), Z = ν⁻¹ p·(0,i)
/// together with the normal N = p·(1,0).
pub fn frame_at(
    p: &AmbientPoint,
    params: &BergerParams,
    space: SpaceKind,
) -> Result<FrameVectors, GeomError> {
    p.check_on_manifold(space)?;
    let pc = p.coords();
    let scale = |c: [f64; 4], s: f64| {
        TangentVector::new(*p, c[0] / s, c[1] / s, c[2] / s, c[3] / s)
    };
    Ok(FrameVectors {
        x: scale(mul4(space, pc, [0.0, 1.0, 0.0, 0.0]), params.lambda()),
        y: scale(mul4(space, pc, [0.0, 0.0, -1.0, 0.0]), params.mu()),
        z: scale(mul4(space, pc, [0.0, 0.0, 0.0, 1.0]), params.nu()),
        n: scale(mul4(space, pc, [1.0, 0.0, 0.0, 0.0]), 1.0),
    })
}

/// Standard scalar product of R⁴, Re(z1 z̄2 + w1 w̄2) in the complex view.
pub fn euclidean_ip(a: &TangentVector, b: &TangentVector) -> f64 {
    a.v1 * b.v1 + a.v2 * b.v2 + a.v3 * b.v3 + a.v4 * b.v4
}
