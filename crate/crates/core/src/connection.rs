//! Structure constants, Levi-Civita connection via the Koszul formula,
//! frame sectional curvatures and the curvature sign regions.
//!
//! Everything here is exact frame algebra: because the metric and the frame
//! {X, Y, Z} are left-invariant, all first-derivative terms of the Koszul
//! formula vanish and the connection reduces to
//!
//! ```text
//! 2 g(∇_{Eᵢ}Eⱼ, Eₖ) = g(Eₖ,[Eᵢ,Eⱼ]) + g(Eⱼ,[Eₖ,Eᵢ]) − g(Eᵢ,[Eⱼ,Eₖ]),
//! ```
//!
//! a purely algebraic statement about the 3×3×3 tables of structure
//! constants. No ambient coordinates appear at any point.

use crate::ambient::SpaceKind;
use crate::error::GeomError;
use crate::metric::{ModelSpec, Signature};

/// Frame Lie brackets [Eᵢ, Eⱼ] = Σₖ c\[i\]\[j\]\[k\]·Eₖ, frame order (X, Y, Z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureConstants {
    pub c: [[[f64; 3]; 3]; 3],
}

/// Connection coefficients ∇_{Eᵢ}Eⱼ = Σₖ gamma\[i\]\[j\]\[k\]·Eₖ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionTable {
    pub gamma: [[[f64; 3]; 3]; 3],
}

impl ConnectionTable {
    /// Largest entrywise difference to another table.
    pub fn max_abs_diff(&self, other: &ConnectionTable) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    worst = worst.max((self.gamma[i][j][k] - other.gamma[i][j][k]).abs());
                }
            }
        }
        worst
    }
}

/// A coordinate 2-plane spanned by two frame vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneKind {
    XY,
    XZ,
    YZ,
}

impl PlaneKind {
    pub const ALL: [PlaneKind; 3] = [PlaneKind::XY, PlaneKind::XZ, PlaneKind::YZ];

    /// Frame indices (i, j) of the spanning vectors.
    pub fn indices(&self) -> (usize, usize) {
        match self {
            PlaneKind::XY => (0, 1),
            PlaneKind::XZ => (0, 2),
            PlaneKind::YZ => (1, 2),
        }
    }
}

impl std::fmt::Display for PlaneKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaneKind::XY => write!(f, "XY"),
            PlaneKind::XZ => write!(f, "XZ"),
            PlaneKind::YZ => write!(f, "YZ"),
        }
    }
}

/// Where a parameter triple sits relative to a curvature sign region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionClass {
    InRegion,
    OnBoundary,
    Outside,
}

impl std::fmt::Display for RegionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionClass::InRegion => write!(f, "in_region"),
            RegionClass::OnBoundary => write!(f, "on_boundary"),
            RegionClass::Outside => write!(f, "outside"),
        }
    }
}

/// Absolute tolerance on the λ² comparison for boundary classification.
pub const REGION_BOUNDARY_TOL: f64 = 1e-10;

/// Bracket tables of both spaces:
///
/// ```text
/// [X,Y] = 2 λ⁻¹μ⁻¹ν Z,   [Z,X] = 2 λ⁻¹μ ν⁻¹ Y,   [Y,Z] = ±2 λ μ⁻¹ν⁻¹ X,
/// ```
///
/// with + on S³ and − on Σ³. Only that single sign differs.
pub fn structure_constants(spec: &ModelSpec) -> StructureConstants {
    let (l, m, n) = (spec.params.lambda(), spec.params.mu(), spec.params.nu());
    let s = match spec.space {
        SpaceKind::S3 => 1.0,
        SpaceKind::Sigma3 => -1.0,
    };
    let mut c = [[[0.0; 3]; 3]; 3];
    c[0][1][2] = 2.0 * n / (l * m);
    c[1][0][2] = -c[0][1][2];
    c[2][0][1] = 2.0 * m / (l * n);
    c[0][2][1] = -c[2][0][1];
    c[1][2][0] = s * 2.0 * l / (m * n);
    c[2][1][0] = -c[1][2][0];
    StructureConstants { c }
}

/// Solves the reduced Koszul formula for left-invariant fields:
///
/// ```text
/// gamma[i][j][k] = εₖ·½·(εₖ c[i][j][k] + εⱼ c[k][i][j] − εᵢ c[j][k][i]).
/// ```
///
/// The leading εₖ recovers the coefficient from the inner product, since
/// ∇_A B = Σₖ εₖ g(∇_A B, Eₖ) Eₖ on a pseudo-orthonormal frame.
pub fn koszul_connection(sc: &StructureConstants, sig: Signature) -> ConnectionTable {
    let eps = sig.eps();
    let c = &sc.c;
    let mut gamma = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                gamma[i][j][k] = eps[k]
                    * 0.5
                    * (eps[k] * c[i][j][k] + eps[j] * c[k][i][j] - eps[i] * c[j][k][i]);
            }
        }
    }
    ConnectionTable { gamma }
}

/// The four tabulated closed-form connection tables, entered verbatim as a
/// lookup that never touches the Koszul solver. Serves as the independent
/// side of the connection cross-check.
pub fn closed_form_connection(spec: &ModelSpec) -> Result<ConnectionTable, GeomError> {
    if !spec.signature.is_tabulated() {
        return Err(GeomError::UnsupportedSignature { signature: spec.signature });
    }
    let lorentzian = spec.signature == Signature::LORENTZIAN;
    let (lam, mu, nu) = (spec.params.lambda(), spec.params.mu(), spec.params.nu());
    let (l, m, n) = (lam * lam, mu * mu, nu * nu);
    let d = lam * mu * nu;
    let mut gamma = [[[0.0; 3]; 3]; 3];
    // Each case lists (∇_X Y, ∇_Y X with its ∇_Y Z partner, ∇_Z X with its
    // ∇_Z Y partner); diagonal rows vanish for all four metrics.
    match (spec.space, lorentzian) {
        (SpaceKind::S3, false) => {
            let a = (-l + m + n) / d;
            let b = (-l + m - n) / d;
            let c = (l + m - n) / d;
            gamma[0][1][2] = a;
            gamma[0][2][1] = -a;
            gamma[1][0][2] = b;
            gamma[1][2][0] = -b;
            gamma[2][0][1] = c;
            gamma[2][1][0] = -c;
        }
        (SpaceKind::S3, true) => {
            let a = (l + m + n) / d;
            let b = (l + m - n) / d;
            let c = (-l + m - n) / d;
            gamma[0][1][2] = a;
            gamma[0][2][1] = -a;
            gamma[1][0][2] = b;
            gamma[1][2][0] = b;
            gamma[2][0][1] = c;
            gamma[2][1][0] = c;
        }
        (SpaceKind::Sigma3, false) => {
            let a = (l + m + n) / d;
            let b = (l + m - n) / d;
            let c = (-l + m - n) / d;
            gamma[0][1][2] = a;
            gamma[0][2][1] = -a;
            gamma[1][0][2] = b;
            gamma[1][2][0] = -b;
            gamma[2][0][1] = c;
            gamma[2][1][0] = -c;
        }
        (SpaceKind::Sigma3, true) => {
            let a = (-l + m + n) / d;
            let b = (-l + m - n) / d;
            let c = (l + m - n) / d;
            gamma[0][1][2] = a;
            gamma[0][2][1] = -a;
            gamma[1][0][2] = b;
            gamma[1][2][0] = -(l - m + n) / d;
            gamma[2][0][1] = c;
            gamma[2][1][0] = c;
        }
    }
    Ok(ConnectionTable { gamma })
}

/// Contracts the curvature operator R(Eᵢ,Eⱼ)Eⱼ = ∇ᵢ∇ⱼEⱼ − ∇ⱼ∇ᵢEⱼ − ∇_{[Eᵢ,Eⱼ]}Eⱼ
/// against Eᵢ with the ε-weighted metric, using the given connection table.
pub fn curvature_numerator_with_table(
    table: &ConnectionTable,
    sc: &StructureConstants,
    sig: Signature,
    plane: PlaneKind,
) -> f64 {
    let (i, j) = plane.indices();
    let g = &table.gamma;
    let c = &sc.c;
    let mut r = [0.0; 3];
    for (m, slot) in r.iter_mut().enumerate() {
        let mut acc = 0.0;
        for k in 0..3 {
            acc += g[j][j][k] * g[i][k][m];
            acc -= g[i][j][k] * g[j][k][m];
            acc -= c[i][j][k] * g[k][j][m];
        }
        *slot = acc;
    }
    sig.eps()[i] * r[i]
}

/// g(R(Eᵢ,Eⱼ)Eⱼ, Eᵢ) computed from the Koszul connection. This is the
/// quantity the closed-form curvature tables list; for planes containing a
/// timelike direction it differs from the textbook sectional curvature by
/// the sign of the plane's Gram determinant.
pub fn curvature_numerator(spec: &ModelSpec, plane: PlaneKind) -> f64 {
    let sc = structure_constants(spec);
    let table = koszul_connection(&sc, spec.signature);
    curvature_numerator_with_table(&table, &sc, spec.signature, plane)
}

/// Sectional curvature K = g(R(A,B)B,A) / (|A|²|B|² − g(A,B)²); for frame
/// planes the denominator is εᵢ·εⱼ.
pub fn sectional_curvature(spec: &ModelSpec, plane: PlaneKind) -> f64 {
    let (i, j) = plane.indices();
    let eps = spec.signature.eps();
    curvature_numerator(spec, plane) / (eps[i] * eps[j])
}

/// Hand-tabulated closed forms of the frame curvatures for the four
/// tabulated cases, independent of the Koszul route.
///
/// The (Σ³, Riemannian, YZ) entry reproduces its source table verbatim even
/// though that entry mixes quartic and quadratic terms and disagrees with
/// the Koszul-derived value whenever μ⁴ + ν⁴ ≠ μ² + ν²; the verification
/// suite tracks that comparison as an expected failure and treats the
/// Koszul value as authoritative. See README.
pub fn closed_form_curvature(spec: &ModelSpec, plane: PlaneKind) -> Result<f64, GeomError> {
    if !spec.signature.is_tabulated() {
        return Err(GeomError::UnsupportedSignature { signature: spec.signature });
    }
    let lorentzian = spec.signature == Signature::LORENTZIAN;
    let (lam, mu, nu) = (spec.params.lambda(), spec.params.mu(), spec.params.nu());
    let (l, m, n) = (lam * lam, mu * mu, nu * nu);
    let d2 = (lam * mu * nu) * (lam * mu * nu);
    let sq = |x: f64| x * x;
    let value = match (spec.space, lorentzian, plane) {
        (SpaceKind::S3, false, PlaneKind::XY) => sq(l - m + n) + 4.0 * n * (m - n),
        (SpaceKind::S3, false, PlaneKind::XZ) => sq(l + m - n) - 4.0 * m * (m - n),
        (SpaceKind::S3, false, PlaneKind::YZ) => sq(l + m + n) - 4.0 * (l * l + m * n),
        (SpaceKind::S3, true, PlaneKind::XY) => sq(l + m - n) + 4.0 * n * (m - n),
        (SpaceKind::S3, true, PlaneKind::XZ) => sq(l - m + n) - 4.0 * m * (m - n),
        (SpaceKind::S3, true, PlaneKind::YZ) => sq(l + m + n) + 2.0 * (l * l - m * m - n * n),
        (SpaceKind::Sigma3, false, PlaneKind::XY) => sq(l + m - n) + 4.0 * n * (m - n),
        (SpaceKind::Sigma3, false, PlaneKind::XZ) => sq(l - m + n) - 4.0 * m * (m - n),
        // Verbatim inconsistent entry: 2(λ⁴ − μ² − ν²) next to a quartic square.
        (SpaceKind::Sigma3, false, PlaneKind::YZ) => -(sq(l + m + n) + 2.0 * (l * l - m - n)),
        (SpaceKind::Sigma3, true, PlaneKind::XY) => sq(l - m + n) + 4.0 * n * (m - n),
        (SpaceKind::Sigma3, true, PlaneKind::XZ) => sq(l + m - n) - 4.0 * m * (m - n),
        (SpaceKind::Sigma3, true, PlaneKind::YZ) => -(sq(l + m + n) - 4.0 * (l * l + m * n)),
    };
    Ok(value / d2)
}

/// One curvature sign region: `K(plane) ≤ 0` exactly when `hypothesis`
/// holds and λ² compares against `boundary` in `direction`, with equality
/// precisely on the boundary.
struct SignRegion {
    hypothesis: bool,
    boundary: f64,
    /// true: region is 0 < λ² ≤ boundary; false: region is λ² ≥ boundary.
    below: bool,
}

fn sign_region(spec: &ModelSpec, plane: PlaneKind) -> Result<SignRegion, GeomError> {
    if !spec.signature.is_tabulated() {
        return Err(GeomError::UnsupportedSignature { signature: spec.signature });
    }
    let lorentzian = spec.signature == Signature::LORENTZIAN;
    let (mu, nu) = (spec.params.mu(), spec.params.nu());
    let (m, n) = (mu * mu, nu * nu);
    // For the XY/XZ regions the boundary is 2ν√(ν²−μ²) ± (μ²−ν²) resp.
    // 2μ√(μ²−ν²) ± (ν²−μ²); the sign of the quadratic tail and the
    // region direction are what distinguish the four cases.
    let xy_hyp = mu < nu;
    let xz_hyp = mu > nu;
    let xy_root = if xy_hyp { 2.0 * nu * (n - m).sqrt() } else { 0.0 };
    let xz_root = if xz_hyp { 2.0 * mu * (m - n).sqrt() } else { 0.0 };
    let yz_core = 2.0 * (m * m - m * n + n * n).sqrt();
    let region = match (spec.space, lorentzian, plane) {
        (SpaceKind::S3, false, PlaneKind::XY) => SignRegion {
            hypothesis: xy_hyp,
            boundary: xy_root + m - n,
            below: true,
        },
        (SpaceKind::S3, false, PlaneKind::XZ) => SignRegion {
            hypothesis: xz_hyp,
            boundary: xz_root + n - m,
            below: true,
        },
        (SpaceKind::S3, false, PlaneKind::YZ) => SignRegion {
            hypothesis: true,
            boundary: (yz_core + m + n) / 3.0,
            below: false,
        },
        (SpaceKind::S3, true, PlaneKind::XY) => SignRegion {
            hypothesis: xy_hyp,
            boundary: xy_root - m + n,
            below: true,
        },
        (SpaceKind::S3, true, PlaneKind::XZ) => SignRegion {
            hypothesis: xz_hyp,
            boundary: xz_root - n + m,
            below: true,
        },
        (SpaceKind::S3, true, PlaneKind::YZ) => SignRegion {
            hypothesis: true,
            boundary: (yz_core - m - n) / 3.0,
            below: true,
        },
        (SpaceKind::Sigma3, false, PlaneKind::XY) => SignRegion {
            hypothesis: xy_hyp,
            boundary: xy_root - m + n,
            below: true,
        },
        (SpaceKind::Sigma3, false, PlaneKind::XZ) => SignRegion {
            hypothesis: xz_hyp,
            boundary: xz_root - n + m,
            below: true,
        },
        (SpaceKind::Sigma3, false, PlaneKind::YZ) => SignRegion {
            hypothesis: true,
            boundary: (yz_core - m - n) / 3.0,
            below: false,
        },
        (SpaceKind::Sigma3, true, PlaneKind::XY) => SignRegion {
            hypothesis: xy_hyp,
            boundary: xy_root + m - n,
            below: true,
        },
        (SpaceKind::Sigma3, true, PlaneKind::XZ) => SignRegion {
            hypothesis: xz_hyp,
            boundary: xz_root + n - m,
            below: true,
        },
        (SpaceKind::Sigma3, true, PlaneKind::YZ) => SignRegion {
            hypothesis: true,
            boundary: (yz_core + m + n) / 3.0,
            below: true,
        },
    };
    Ok(region)
}

/// Classifies λ² against the K ≤ 0 region of the given plane.
/// `OnBoundary` within [`REGION_BOUNDARY_TOL`] of the λ² threshold.
pub fn sign_region_check(spec: &ModelSpec, plane: PlaneKind) -> Result<RegionClass, GeomError> {
    let region = sign_region(spec, plane)?;
    if !region.hypothesis {
        return Ok(RegionClass::Outside);
    }
    let l2 = spec.params.lambda() * spec.params.lambda();
    if (l2 - region.boundary).abs() <= REGION_BOUNDARY_TOL {
        return Ok(RegionClass::OnBoundary);
    }
    let inside = if region.below { l2 < region.boundary } else { l2 > region.boundary };
    Ok(if inside { RegionClass::InRegion } else { RegionClass::Outside })
}

/// λ² value of the region boundary for the given (μ, ν), if the region's
/// hypothesis holds and the boundary is attainable by a positive λ².
pub fn sign_region_boundary(spec: &ModelSpec, plane: PlaneKind) -> Result<Option<f64>, GeomError> {
    let region = sign_region(spec, plane)?;
    Ok((region.hypothesis && region.boundary > 0.0).then_some(region.boundary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::BergerParams;

    fn spec(
        space: SpaceKind,
        sig: Signature,
        lambda: f64,
        mu: f64,
        nu: f64,
    ) -> ModelSpec {
        ModelSpec::new(space, BergerParams::new(lambda, mu, nu).unwrap(), sig)
    }

    #[test]
    fn bracket_tables() {
        let s = spec(SpaceKind::S3, Signature::RIEMANNIAN, 1.0, 1.0, 1.0);
        let c = structure_constants(&s).c;
        assert_eq!(c[0][1][2], 2.0); // [X,Y] = 2Z
        assert_eq!(c[2][0][1], 2.0); // [Z,X] = 2Y
        assert_eq!(c[1][2][0], 2.0); // [Y,Z] = 2X
        let sg = spec(SpaceKind::Sigma3, Signature::RIEMANNIAN, 1.0, 1.0, 1.0);
        assert_eq!(structure_constants(&sg).c[1][2][0], -2.0);
        let s2 = spec(SpaceKind::S3, Signature::RIEMANNIAN, 1.0, 2.0, 1.0);
        assert_eq!(structure_constants(&s2).c[0][1][2], 1.0);
    }

    #[test]
    fn koszul_reproduces_table_entries() {
        // Riemannian S³ at unit weights: ∇_X Y = Z, ∇_Y X = −Z.
        let s = spec(SpaceKind::S3, Signature::RIEMANNIAN, 1.0, 1.0, 1.0);
        let t = koszul_connection(&structure_constants(&s), s.signature);
        assert!((t.gamma[0][1][2] - 1.0).abs() <= 1e-15);
        assert!((t.gamma[1][0][2] + 1.0).abs() <= 1e-15);
        // Lorentzian S³ at unit weights: ∇_X Y = 3Z.
        let h = spec(SpaceKind::S3, Signature::LORENTZIAN, 1.0, 1.0, 1.0);
        let th = koszul_connection(&structure_constants(&h), h.signature);
        assert!((th.gamma[0][1][2] - 3.0).abs() <= 1e-15);
        // Lorentzian Σ³ at unit weights: ∇_Z Y = X.
        let sh = spec(SpaceKind::Sigma3, Signature::LORENTZIAN, 1.0, 1.0, 1.0);
        let tsh = koszul_connection(&structure_constants(&sh), sh.signature);
        assert!((tsh.gamma[2][1][0] - 1.0).abs() <= 1e-15);
        // Diagonal rows vanish everywhere.
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(th.gamma[i][i][k], 0.0);
            }
        }
    }

    #[test]
    fn closed_form_equals_koszul_all_cases() {
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                for (l, m, n) in [(1.0, 1.0, 1.0), (0.7, 1.9, 0.5), (2.0, 0.6, 1.3)] {
                    let s = spec(space, sig, l, m, n);
                    let koszul = koszul_connection(&structure_constants(&s), sig);
                    let table = closed_form_connection(&s).unwrap();
                    assert!(
                        koszul.max_abs_diff(&table) <= 1e-12,
                        "{space} {sig} ({l},{m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_rejects_untabulated_signature() {
        use crate::metric::Sign;
        let sig = Signature::new(Sign::Plus, Sign::Minus, Sign::Minus);
        let s = spec(SpaceKind::S3, sig, 1.0, 1.0, 1.0);
        assert_eq!(
            closed_form_connection(&s).unwrap_err().code(),
            "unsupported_signature"
        );
        assert_eq!(
            sign_region_check(&s, PlaneKind::XY).unwrap_err().code(),
            "unsupported_signature"
        );
    }

    #[test]
    fn round_sphere_curvature_one() {
        let s = spec(SpaceKind::S3, Signature::RIEMANNIAN, 1.0, 1.0, 1.0);
        for plane in PlaneKind::ALL {
            assert!((curvature_numerator(&s, plane) - 1.0).abs() <= 1e-12);
            assert!((sectional_curvature(&s, plane) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn curvature_examples() {
        // S³ Riemannian, λ=2, μ=ν=1: K(X,Y) = ((4−1+1)² + 0)/4 = 4.
        let s = spec(SpaceKind::S3, Signature::RIEMANNIAN, 2.0, 1.0, 1.0);
        assert!((curvature_numerator(&s, PlaneKind::XY) - 4.0).abs() <= 1e-12);
        // S³ Lorentzian at unit weights: K(Y,Z) = 9 + 2(1−1−1) = 7.
        let h = spec(SpaceKind::S3, Signature::LORENTZIAN, 1.0, 1.0, 1.0);
        assert!((curvature_numerator(&h, PlaneKind::YZ) - 7.0).abs() <= 1e-12);
        // For planes containing X the Lorentzian Gram determinant is −1.
        let num_xy = curvature_numerator(&h, PlaneKind::XY);
        assert!((num_xy - 1.0).abs() <= 1e-12);
        assert!((sectional_curvature(&h, PlaneKind::XY) + num_xy).abs() <= 1e-15);
        assert!(
            (sectional_curvature(&h, PlaneKind::YZ) - curvature_numerator(&h, PlaneKind::YZ))
                .abs()
                <= 1e-15
        );
    }

    #[test]
    fn curvature_swapping_plane_vectors_is_symmetric() {
        // g(R(Ei,Ej)Ej,Ei) must be unchanged under i ↔ j for these metrics.
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                let s = spec(space, sig, 1.3, 0.8, 1.7);
                let sc = structure_constants(&s);
                let t = koszul_connection(&sc, sig);
                for plane in PlaneKind::ALL {
                    let (i, j) = plane.indices();
                    let fwd = curvature_numerator_with_table(&t, &sc, sig, plane);
                    // Recontract with the roles swapped.
                    let g = &t.gamma;
                    let c = &sc.c;
                    let mut r = [0.0; 3];
                    for (mm, slot) in r.iter_mut().enumerate() {
                        let mut acc = 0.0;
                        for k in 0..3 {
                            acc += g[i][i][k] * g[j][k][mm];
                            acc -= g[j][i][k] * g[i][k][mm];
                            acc -= -c[i][j][k] * g[k][i][mm];
                        }
                        *slot = acc;
                    }
                    let rev = sig.eps()[j] * r[j];
                    assert!((fwd - rev).abs() <= 1e-12, "{space} {sig} {plane}");
                }
            }
        }
    }

    #[test]
    fn sigma3_riemannian_yz_table_entry_disagrees_with_koszul() {
        // The tabulated (Σ³, Riemannian, YZ) closed form is dimensionally
        // inconsistent; away from unit weights it must differ from the
        // Koszul value by 2(μ⁴−μ²+ν⁴−ν²)/(λμν)².
        let s = spec(SpaceKind::Sigma3, Signature::RIEMANNIAN, 1.1, 1.4, 0.7);
        let koszul = curvature_numerator(&s, PlaneKind::YZ);
        let printed = closed_form_curvature(&s, PlaneKind::YZ).unwrap();
        let (m, n) = (1.4f64 * 1.4, 0.7f64 * 0.7);
        let d2 = (1.1f64 * 1.4 * 0.7).powi(2);
        let expected_gap = -2.0 * (m * m - m + n * n - n) / d2;
        assert!((printed - koszul - expected_gap).abs() <= 1e-12);
        assert!((printed - koszul).abs() > 1e-3);
    }

    // Documentation of the inconsistent tabulated entry: this comparison is
    // expected to fail, which the should_panic marker records.
    #[test]
    #[should_panic(expected = "tabulated YZ entry")]
    fn sigma3_riemannian_yz_table_entry_vs_koszul_expected_fail() {
        let s = spec(SpaceKind::Sigma3, Signature::RIEMANNIAN, 1.1, 1.4, 0.7);
        let koszul = curvature_numerator(&s, PlaneKind::YZ);
        let printed = closed_form_curvature(&s, PlaneKind::YZ).unwrap();
        assert!(
            (printed - koszul).abs() <= 1e-12,
            "tabulated YZ entry deviates by {}",
            (printed - koszul).abs()
        );
    }

    #[test]
    fn sign_region_examples() {
        // Boundary of the S³ Riemannian XY region at μ=1, ν=2: λ² = 4√3 − 3.
        let lam = (4.0 * 3.0f64.sqrt() - 3.0).sqrt();
        let s = spec(SpaceKind::S3, Signature::RIEMANNIAN, lam, 1.0, 2.0);
        assert_eq!(sign_region_check(&s, PlaneKind::XY).unwrap(), RegionClass::OnBoundary);
        assert!(curvature_numerator(&s, PlaneKind::XY).abs() <= 1e-10);
        // Hypothesis μ<ν fails: always outside.
        let o = spec(SpaceKind::S3, Signature::RIEMANNIAN, 0.5, 2.0, 1.0);
        assert_eq!(sign_region_check(&o, PlaneKind::XY).unwrap(), RegionClass::Outside);
        // Round sphere: YZ region not reached, K = 1 > 0.
        let r = spec(SpaceKind::S3, Signature::RIEMANNIAN, 1.0, 1.0, 1.0);
        assert_eq!(sign_region_check(&r, PlaneKind::YZ).unwrap(), RegionClass::Outside);
    }

    #[test]
    fn torsion_free_and_metric_compatible() {
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                let s = spec(space, sig, 1.6, 0.9, 1.2);
                let sc = structure_constants(&s);
                let t = koszul_connection(&sc, sig);
                let eps = sig.eps();
                for i in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            let torsion =
                                t.gamma[i][j][k] - t.gamma[j][i][k] - sc.c[i][j][k];
                            assert!(torsion.abs() <= 1e-14);
                            let compat =
                                eps[k] * t.gamma[i][j][k] + eps[j] * t.gamma[i][k][j];
                            assert!(compat.abs() <= 1e-14);
                        }
                    }
                }
            }
        }
    }
}
