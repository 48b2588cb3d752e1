//! The torus families T²_θ ⊂ S³ and U²_θ ⊂ Σ³: fundamental forms, second
//! fundamental form via orthogonal decomposition, mean curvature and the
//! constant-mean-curvature solver.
//!
//! The families are
//!
//! ```text
//! S³:  F_θ(α, β) = (cos θ·e^{iα},  sin θ·e^{iβ}),   0 < θ < π/2,
//! Σ³:  F_θ(α, β) = (cosh θ·e^{iα}, sinh θ·e^{iβ}),  θ > 0,
//! ```
//!
//! the excluded θ values degenerating to circles. All second-fundamental-
//! form work goes through the ratio projections (G+F)/(EG−F²) and
//! (E+F)/(EG−F²) (equivalently a 2×2 Gram solve), never through the
//! Gram-Schmidt functions f₁..f₃, so the same code path is valid when the
//! induced metric is indefinite.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::ambient::{frame_at, AmbientPoint, SpaceKind, TangentVector};
use crate::error::GeomError;
use crate::metric::{berger_ip_raw, BergerParams, ModelSpec};

/// Cutoff below which |EG−F²| counts as degenerate.
pub const DEGENERATE_DET_TOL: f64 = 1e-14;

/// Mean-curvature norm at or below this value counts as minimal.
pub const MINIMAL_TOL: f64 = 1e-12;

/// Residual gate for solutions returned by the CMC solvers.
pub const CMC_RESIDUAL_TOL: f64 = 1e-10;

/// Coordinates (θ, α, β) of a point on a torus of the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl TorusPoint {
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Self {
        Self { theta, alpha, beta }
    }
}

/// First fundamental form (E, F, G) of a torus at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl FundamentalForm {
    /// EG − F².
    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

/// Coefficients on the frame vectors Y_p and Z_p. The second fundamental
/// forms and mean curvature vectors of both torus families live entirely in
/// span{Y_p, Z_p}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YzComponents {
    pub y: f64,
    pub z: f64,
}

/// Everything the mean-curvature computation produces at one torus point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceGeometry {
    pub form: FundamentalForm,
    /// B(∂α, ∂α) in frame components.
    pub b_alpha: YzComponents,
    /// trace B = ((G−E)/(EG−F²))·B(∂α, ∂α).
    pub trace_b: YzComponents,
    /// Mean curvature vector H = ½ trace B.
    pub h: YzComponents,
    /// ‖H‖ = √|g(H, H)|.
    pub h_norm: f64,
    pub minimal: bool,
}

/// All θ in the valid domain attaining the requested norm, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct CmcSolution {
    pub thetas: Vec<f64>,
}

/// The coordinate tangent vectors of a torus point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPartials {
    pub d_alpha: TangentVector,
    pub d_beta: TangentVector,
    pub d_theta: TangentVector,
}

fn check_theta_domain(space: SpaceKind, theta: f64) -> Result<(), GeomError> {
    let ok = match space {
        SpaceKind::S3 => theta > 0.0 && theta < FRAC_PI_2,
        SpaceKind::Sigma3 => theta > 0.0 && theta.is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(GeomError::DegenerateTorus { space, theta })
    }
}

/// cos/sin for S³, cosh/sinh for Σ³.
fn radial(space: SpaceKind, theta: f64) -> (f64, f64) {
    match space {
        SpaceKind::S3 => (theta.cos(), theta.sin()),
        SpaceKind::Sigma3 => (theta.cosh(), theta.sinh()),
    }
}

/// F_θ(α, β) in ambient coordinates. Lands on the manifold exactly up to
/// rounding of the trig evaluations.
pub fn embed(space: SpaceKind, tp: &TorusPoint) -> Result<AmbientPoint, GeomError> {
    check_theta_domain(space, tp.theta)?;
    let (c, s) = radial(space, tp.theta);
    Ok(AmbientPoint::new(
        c * tp.alpha.cos(),
        c * tp.alpha.sin(),
        s * tp.beta.cos(),
        s * tp.beta.sin(),
    ))
}

/// Closed-form coordinate derivatives ∂α, ∂β, ∂θ of the embedding.
pub fn partials(space: SpaceKind, tp: &TorusPoint) -> Result<TorusPartials, GeomError> {
    let p = embed(space, tp)?;
    let (c, s) = radial(space, tp.theta);
    let (ca, sa) = (tp.alpha.cos(), tp.alpha.sin());
    let (cb, sb) = (tp.beta.cos(), tp.beta.sin());
    // ∂θ of the radial profile: (−sin, cos) on S³, (sinh, cosh) on Σ³.
    let (dc, ds) = match space {
        SpaceKind::S3 => (-s, c),
        SpaceKind::Sigma3 => (s, c),
    };
    Ok(TorusPartials {
        d_alpha: TangentVector::new(p, -c * sa, c * ca, 0.0, 0.0),
        d_beta: TangentVector::new(p, 0.0, 0.0, -s * sb, s * cb),
        d_theta: TangentVector::new(p, dc * ca, dc * sa, ds * cb, ds * sb),
    })
}

/// ε₂μ²sin²(α+β) + ε₃ν²cos²(α+β), the angular profile of the induced metric.
fn angular_profile(spec: &ModelSpec, tp: &TorusPoint) -> f64 {
    let a = tp.alpha + tp.beta;
    let (mu, nu) = (spec.params.mu(), spec.params.nu());
    spec.signature.eps2() * mu * mu * a.sin() * a.sin()
        + spec.signature.eps3() * nu * nu * a.cos() * a.cos()
}

/// Closed-form first fundamental form. On S³:
///
/// ```text
/// E = cos²θ (ε₁λ²cos²θ + sin²θ·D),   F = cos²θ sin²θ (ε₁λ² − D),
/// G = sin²θ (ε₁λ²sin²θ + cos²θ·D),
/// ```
///
/// with D = ε₂μ²sin²(α+β) + ε₃ν²cos²(α+β); on Σ³ the same with cosh/sinh
/// and F = −cosh²θ sinh²θ (ε₁λ² + D).
pub fn first_fundamental_form(
    spec: &ModelSpec,
    tp: &TorusPoint,
) -> Result<FundamentalForm, GeomError> {
    check_theta_domain(spec.space, tp.theta)?;
    let (c, s) = radial(spec.space, tp.theta);
    let (c2, s2) = (c * c, s * s);
    let d = angular_profile(spec, tp);
    let l2 = spec.signature.eps1() * spec.params.lambda() * spec.params.lambda();
    let (e, f, g) = match spec.space {
        SpaceKind::S3 => (
            c2 * (l2 * c2 + s2 * d),
            c2 * s2 * (l2 - d),
            s2 * (l2 * s2 + c2 * d),
        ),
        SpaceKind::Sigma3 => (
            c2 * (l2 * c2 + s2 * d),
            -c2 * s2 * (l2 + d),
            s2 * (l2 * s2 + c2 * d),
        ),
    };
    Ok(FundamentalForm { e, f, g })
}

/// The same form evaluated through the metric on the coordinate partials,
/// kept as an independent route for cross-checking the closed form.
pub fn first_fundamental_form_via_metric(
    spec: &ModelSpec,
    tp: &TorusPoint,
) -> Result<FundamentalForm, GeomError> {
    let pts = partials(spec.space, tp)?;
    let p = pts.d_alpha.base;
    Ok(FundamentalForm {
        e: berger_ip_raw(&p, &pts.d_alpha, &pts.d_alpha, spec),
        f: berger_ip_raw(&p, &pts.d_alpha, &pts.d_beta, spec),
        g: berger_ip_raw(&p, &pts.d_beta, &pts.d_beta, spec),
    })
}

/// Gram-Schmidt coefficients f₁ = 1/√E, f₂ = −F/√(E(EG−F²)),
/// f₃ = √E/√(EG−F²), defined only for a positive-definite induced metric.
/// Callers on indefinite forms must use the ratio formula instead.
pub fn gram_schmidt_basis(form: &FundamentalForm) -> Result<(f64, f64, f64), GeomError> {
    let det = form.det();
    if form.e <= 0.0 || det <= 0.0 {
        return Err(GeomError::IndefiniteInducedMetric { e: form.e, det });
    }
    let f1 = 1.0 / form.e.sqrt();
    let f2 = -form.f / (form.e * det).sqrt();
    let f3 = form.e.sqrt() / det.sqrt();
    Ok((f1, f2, f3))
}

/// Ambient second derivative of the embedding along one coordinate: the
/// flat connection gives ∇_{∂α}∂α = (−cosθ·e^{iα}, 0) and
/// ∇_{∂β}∂β = (0, −sinθ·e^{iβ}) (cosh/sinh on Σ³).
fn coordinate_acceleration(space: SpaceKind, tp: &TorusPoint, along_alpha: bool) -> [f64; 4] {
    let (c, s) = radial(space, tp.theta);
    if along_alpha {
        [-c * tp.alpha.cos(), -c * tp.alpha.sin(), 0.0, 0.0]
    } else {
        [0.0, 0.0, -s * tp.beta.cos(), -s * tp.beta.sin()]
    }
}

/// Orthogonal decomposition of an ambient vector `w` at `p`: strips the
/// component tangent to the torus (2×2 Gram solve in the induced metric)
/// and the component along the manifold normal N_p, leaving the second-
/// fundamental-form part. Valid for indefinite induced metrics.
fn strip_tangential_and_normal(
    spec: &ModelSpec,
    p: &AmbientPoint,
    d_alpha: &TangentVector,
    d_beta: &TangentVector,
    w: &TangentVector,
    form: &FundamentalForm,
) -> Result<TangentVector, GeomError> {
    let det = form.det();
    if det.abs() < DEGENERATE_DET_TOL {
        return Err(GeomError::DegenerateInducedMetric { det });
    }
    let wa = berger_ip_raw(p, w, d_alpha, spec);
    let wb = berger_ip_raw(p, w, d_beta, spec);
    let a = (form.g * wa - form.f * wb) / det;
    let b = (form.e * wb - form.f * wa) / det;
    // N_p = p·(1,0) = p itself; carries metric weight +1 in every signature.
    let n = TangentVector::from_components(*p, p.coords());
    let wn = berger_ip_raw(p, w, &n, spec);
    let [wc, dac, dbc, nc] = [w.components(), d_alpha.components(), d_beta.components(), n.components()];
    let mut out = [0.0; 4];
    for i in 0..4 {
        out[i] = wc[i] - a * dac[i] - b * dbc[i] - wn * nc[i];
    }
    Ok(TangentVector::from_components(*p, out))
}

fn yz_of(spec: &ModelSpec, v: &TangentVector) -> Result<YzComponents, GeomError> {
    let p = v.base;
    let fr = frame_at(&p, &spec.params, spec.space)?;
    Ok(YzComponents {
        y: spec.signature.eps2() * berger_ip_raw(&p, v, &fr.y, spec),
        z: spec.signature.eps3() * berger_ip_raw(&p, v, &fr.z, spec),
    })
}

fn second_ff_vector(
    spec: &ModelSpec,
    tp: &TorusPoint,
    along_alpha: bool,
) -> Result<TangentVector, GeomError> {
    let pts = partials(spec.space, tp)?;
    let p = pts.d_alpha.base;
    let w = TangentVector::from_components(p, coordinate_acceleration(spec.space, tp, along_alpha));
    let form = first_fundamental_form(spec, tp)?;
    strip_tangential_and_normal(spec, &p, &pts.d_alpha, &pts.d_beta, &w, &form)
}

/// B(∂α, ∂α) as an ambient vector. Its X- and N-components vanish for these
/// tori; the YZ accessor below is the usual entry point.
pub fn second_ff_alpha_ambient(
    spec: &ModelSpec,
    tp: &TorusPoint,
) -> Result<TangentVector, GeomError> {
    second_ff_vector(spec, tp, true)
}

/// Frame components (b_Y, b_Z) of B(∂α, ∂α).
pub fn second_ff_alpha(spec: &ModelSpec, tp: &TorusPoint) -> Result<YzComponents, GeomError> {
    yz_of(spec, &second_ff_vector(spec, tp, true)?)
}

/// Frame components of B(∂β, ∂β); equals −B(∂α, ∂α) for these tori.
pub fn second_ff_beta(spec: &ModelSpec, tp: &TorusPoint) -> Result<YzComponents, GeomError> {
    yz_of(spec, &second_ff_vector(spec, tp, false)?)
}

/// Mean curvature data at a torus point via the decomposition pipeline:
/// trace B = ((G−E)/(EG−F²))·B(∂α,∂α), H = ½ trace B, ‖H‖ = √|g(H,H)|.
pub fn mean_curvature(spec: &ModelSpec, tp: &TorusPoint) -> Result<SurfaceGeometry, GeomError> {
    let form = first_fundamental_form(spec, tp)?;
    let det = form.det();
    if det.abs() < DEGENERATE_DET_TOL {
        return Err(GeomError::DegenerateInducedMetric { det });
    }
    let b_alpha = second_ff_alpha(spec, tp)?;
    let ratio = (form.g - form.e) / det;
    let trace_b = YzComponents { y: ratio * b_alpha.y, z: ratio * b_alpha.z };
    let h = YzComponents { y: 0.5 * trace_b.y, z: 0.5 * trace_b.z };
    let norm_sq = spec.signature.eps2() * h.y * h.y + spec.signature.eps3() * h.z * h.z;
    let h_norm = norm_sq.abs().sqrt();
    Ok(SurfaceGeometry {
        form,
        b_alpha,
        trace_b,
        h,
        h_norm,
        minimal: h_norm <= MINIMAL_TOL,
    })
}

/// Closed-form mean-curvature norm,
///
/// ```text
/// S³:  ‖H‖ = μν / (|tan 2θ|·(μ²sin²(α+β) + ν²cos²(α+β))^{3/2}),
/// Σ³:  ‖H‖ = μν / ( tanh 2θ ·(μ²sin²(α+β) + ν²cos²(α+β))^{3/2}),
/// ```
///
/// independent of λ and of the signature.
pub fn h_norm_closed_form(
    space: SpaceKind,
    params: &BergerParams,
    tp: &TorusPoint,
) -> Result<f64, GeomError> {
    check_theta_domain(space, tp.theta)?;
    let a = tp.alpha + tp.beta;
    let (mu, nu) = (params.mu(), params.nu());
    let d = mu * mu * a.sin() * a.sin() + nu * nu * a.cos() * a.cos();
    let inv_tan = match space {
        SpaceKind::S3 => ((2.0 * tp.theta).cos() / (2.0 * tp.theta).sin()).abs(),
        SpaceKind::Sigma3 => 1.0 / (2.0 * tp.theta).tanh(),
    };
    Ok(mu * nu * inv_tan / d.powf(1.5))
}

fn require_equal_mu_nu(spec: &ModelSpec) -> Result<f64, GeomError> {
    let (mu, nu) = (spec.params.mu(), spec.params.nu());
    if (mu - nu).abs() > 1e-14 {
        return Err(GeomError::HypothesisViolated { mu, nu });
    }
    Ok(mu)
}

/// Verifies the ‖H(θ)‖ = C residual of every returned solution through the
/// full decomposition pipeline before handing it out.
fn gate_residuals(spec: &ModelSpec, thetas: Vec<f64>, target: f64) -> Result<CmcSolution, GeomError> {
    for &theta in &thetas {
        let tp = TorusPoint::new(theta, 0.0, 0.0);
        let got = mean_curvature(spec, &tp)?.h_norm;
        let residual = (got - target).abs();
        if residual > CMC_RESIDUAL_TOL {
            return Err(GeomError::SolutionResidual { residual, tolerance: CMC_RESIDUAL_TOL });
        }
    }
    Ok(CmcSolution { thetas })
}

/// Solves ‖H(θ)‖ ≡ C for μ = ν in closed form.
///
/// On S³, ‖H‖ = 1/(μ|tan 2θ|): C = 0 has the unique solution θ = π/4
/// (the minimal torus); C > 0 has the pair ½·atan(1/(Cμ)) and its
/// reflection π/2 − ½·atan(1/(Cμ)).
///
/// On Σ³, ‖H‖ = 1/(μ tanh 2θ) > 1/μ for every θ > 0, so only C > 1/μ is
/// attainable, with the unique solution θ = ½·artanh(1/(Cμ)); in particular
/// no torus of the family is minimal.
pub fn cmc_solve(spec: &ModelSpec, target: f64) -> Result<CmcSolution, GeomError> {
    let mu = require_equal_mu_nu(spec)?;
    match spec.space {
        SpaceKind::S3 => {
            if target < 0.0 {
                return Err(GeomError::NoSolution { target, bound: 0.0 });
            }
            if target == 0.0 {
                return gate_residuals(spec, vec![FRAC_PI_4], target);
            }
            let t = 0.5 * (1.0 / (target * mu)).atan();
            gate_residuals(spec, vec![t, FRAC_PI_2 - t], target)
        }
        SpaceKind::Sigma3 => {
            let bound = 1.0 / mu;
            if target <= bound {
                return Err(GeomError::NoSolution { target, bound });
            }
            let t = 0.5 * (1.0 / (target * mu)).atanh();
            gate_residuals(spec, vec![t], target)
        }
    }
}

/// Bisection cross-check for the closed-form solver. On S³ it brackets the
/// two branches on (0, π/4 − 10⁻⁶] and [π/4 + 10⁻⁶, π/2), solving the
/// signed equation cot(2θ)/μ = ±C on the strictly decreasing cotangent;
/// targets so small that both roots fall inside the 10⁻⁶ collars around
/// π/4 are not resolvable by this route (C = 0 itself maps to θ = π/4).
/// On Σ³ it brackets the single root of 1/(μ tanh 2θ) = C.
pub fn cmc_solve_bisection(spec: &ModelSpec, target: f64) -> Result<CmcSolution, GeomError> {
    let mu = require_equal_mu_nu(spec)?;
    if target < 0.0 {
        return Err(GeomError::NoSolution { target, bound: 0.0 });
    }
    let bisect = |mut lo: f64, mut hi: f64, f: &dyn Fn(f64) -> f64| -> Option<f64> {
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            return Some(lo);
        }
        if fhi == 0.0 {
            return Some(hi);
        }
        if flo.signum() == fhi.signum() {
            return None;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                return Some(mid);
            }
            if fm.signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(0.5 * (lo + hi))
    };
    match spec.space {
        SpaceKind::S3 => {
            if target == 0.0 {
                return gate_residuals(spec, vec![FRAC_PI_4], target);
            }
            let collar = 1e-6;
            let signed = move |theta: f64| (2.0 * theta).cos() / ((2.0 * theta).sin() * mu);
            let lower = bisect(1e-9, FRAC_PI_4 - collar, &|t| signed(t) - target);
            let upper = bisect(FRAC_PI_4 + collar, FRAC_PI_2 - 1e-9, &|t| signed(t) + target);
            let mut thetas: Vec<f64> = [lower, upper].into_iter().flatten().collect();
            thetas.sort_by(f64::total_cmp);
            if thetas.len() != 2 {
                return Err(GeomError::NoSolution { target, bound: signed(FRAC_PI_4 - collar) });
            }
            gate_residuals(spec, thetas, target)
        }
        SpaceKind::Sigma3 => {
            let bound = 1.0 / mu;
            if target <= bound {
                return Err(GeomError::NoSolution { target, bound });
            }
            let f = move |theta: f64| 1.0 / ((2.0 * theta).tanh() * mu) - target;
            let root = bisect(1e-12, 400.0, &f)
                .ok_or(GeomError::NoSolution { target, bound })?;
            gate_residuals(spec, vec![root], target)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::Signature;
    use std::f64::consts::{FRAC_PI_3, PI};

    fn rspec(space: SpaceKind, l: f64, m: f64, n: f64) -> ModelSpec {
        ModelSpec::riemannian(space, BergerParams::new(l, m, n).unwrap())
    }

    #[test]
    fn embed_examples() {
        // Clifford torus point.
        let p = embed(SpaceKind::S3, &TorusPoint::new(FRAC_PI_4, 0.0, 0.0)).unwrap();
        let r = 0.5f64.sqrt();
        for (got, want) in p.coords().iter().zip([r, 0.0, r, 0.0]) {
            assert!((got - want).abs() <= 1e-15);
        }
        let q = embed(SpaceKind::S3, &TorusPoint::new(FRAC_PI_3, FRAC_PI_2, 0.0)).unwrap();
        for (got, want) in q.coords().iter().zip([0.0, 0.5, 0.75f64.sqrt(), 0.0]) {
            assert!((got - want).abs() <= 1e-15);
        }
        let u = embed(SpaceKind::Sigma3, &TorusPoint::new(1.0, 0.0, 0.0)).unwrap();
        for (got, want) in u.coords().iter().zip([1f64.cosh(), 0.0, 1f64.sinh(), 0.0]) {
            assert!((got - want).abs() <= 1e-15);
        }
        assert!(u.manifold_residual(SpaceKind::Sigma3).abs() <= 1e-14);
    }

    #[test]
    fn embed_rejects_degenerate_theta() {
        for bad in [0.0, FRAC_PI_2, -0.3, PI] {
            let err = embed(SpaceKind::S3, &TorusPoint::new(bad, 0.1, 0.2)).unwrap_err();
            assert_eq!(err.code(), "degenerate_torus");
        }
        assert!(embed(SpaceKind::Sigma3, &TorusPoint::new(0.0, 0.0, 0.0)).is_err());
        assert!(embed(SpaceKind::Sigma3, &TorusPoint::new(-1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn partials_examples() {
        let pts = partials(SpaceKind::S3, &TorusPoint::new(FRAC_PI_4, 0.0, 0.0)).unwrap();
        let r = 0.5f64.sqrt();
        for (got, want) in pts.d_alpha.components().iter().zip([0.0, r, 0.0, 0.0]) {
            assert!((got - want).abs() <= 1e-15);
        }
        // Disjoint complex slots: Euclidean orthogonality of ∂α and ∂β.
        assert_eq!(crate::ambient::euclidean_ip(&pts.d_alpha, &pts.d_beta), 0.0);
        // Partials are tangent to the ambient space and agree with a
        // central difference of the embedding at step 1e-6.
        let cfg = crate::verify::FdConfig::new(1e-6, 1, 0).unwrap();
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            let tp = TorusPoint::new(0.8, 1.1, -0.4);
            let pp = partials(space, &tp).unwrap();
            for (v, dir) in [
                (pp.d_alpha, crate::verify::PartialDir::Alpha),
                (pp.d_beta, crate::verify::PartialDir::Beta),
                (pp.d_theta, crate::verify::PartialDir::Theta),
            ] {
                assert!(v.tangency_residual(space).abs() <= 1e-14);
                let fd = crate::verify::fd_partial(space, &tp, dir, &cfg).unwrap();
                for (a, b) in v.components().iter().zip(fd.components()) {
                    assert!((a - b).abs() <= 1e-9, "{space} {dir:?}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn fundamental_form_examples() {
        let spec = rspec(SpaceKind::S3, 1.0, 1.0, 1.0);
        let ff = first_fundamental_form(&spec, &TorusPoint::new(FRAC_PI_4, 0.3, 0.9)).unwrap();
        assert!((ff.e - 0.5).abs() <= 1e-15);
        assert!(ff.f.abs() <= 1e-15);
        assert!((ff.g - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn fundamental_form_identities() {
        let tp = TorusPoint::new(0.7, 0.4, 1.3);
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                let spec = ModelSpec::new(space, BergerParams::new(1.4, 0.8, 1.9).unwrap(), sig);
                let ff = first_fundamental_form(&spec, &tp).unwrap();
                let l2 = sig.eps1() * 1.4 * 1.4;
                let (c, s) = radial(space, tp.theta);
                match space {
                    SpaceKind::S3 => {
                        assert!((ff.f - (-ff.e + l2 * c * c)).abs() <= 1e-12);
                        assert!((ff.f - (-ff.g + l2 * s * s)).abs() <= 1e-12);
                        assert!((ff.g - (ff.e + l2 * (s * s - c * c))).abs() <= 1e-12);
                    }
                    SpaceKind::Sigma3 => {
                        assert!((ff.f - (-ff.e + l2 * c * c)).abs() <= 1e-12);
                        assert!((ff.f - (-ff.g - l2 * s * s)).abs() <= 1e-12);
                        assert!((ff.g - (ff.e - l2 * (c * c + s * s))).abs() <= 1e-12);
                    }
                }
                let via = first_fundamental_form_via_metric(&spec, &tp).unwrap();
                assert!((ff.e - via.e).abs() <= 1e-12);
                assert!((ff.f - via.f).abs() <= 1e-12);
                assert!((ff.g - via.g).abs() <= 1e-12);
                // The Riemannian S³ form is positive definite on the open
                // θ interval.
                if space == SpaceKind::S3 && sig == Signature::RIEMANNIAN {
                    assert!(ff.e > 0.0 && ff.g > 0.0 && ff.det() > 0.0);
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_examples() {
        let (f1, f2, f3) =
            gram_schmidt_basis(&FundamentalForm { e: 1.0, f: 0.0, g: 1.0 }).unwrap();
        assert_eq!((f1, f2, f3), (1.0, 0.0, 1.0));
        let (f1, f2, f3) =
            gram_schmidt_basis(&FundamentalForm { e: 0.5, f: 0.0, g: 0.5 }).unwrap();
        assert!((f1 - 2.0f64.sqrt()).abs() <= 1e-15);
        assert_eq!(f2, 0.0);
        assert!((f3 - 2.0f64.sqrt()).abs() <= 1e-15);
        let err =
            gram_schmidt_basis(&FundamentalForm { e: -1.0, f: 0.0, g: 1.0 }).unwrap_err();
        assert_eq!(err.code(), "indefinite_induced_metric");
    }

    #[test]
    fn gram_schmidt_vectors_are_orthonormal() {
        let spec = rspec(SpaceKind::S3, 1.3, 0.7, 1.8);
        let tp = TorusPoint::new(0.9, 0.5, -1.2);
        let ff = first_fundamental_form(&spec, &tp).unwrap();
        let (f1, f2, f3) = gram_schmidt_basis(&ff).unwrap();
        let pts = partials(spec.space, &tp).unwrap();
        let p = pts.d_alpha.base;
        let comb = |ca: f64, cb: f64| {
            let a = pts.d_alpha.components();
            let b = pts.d_beta.components();
            TangentVector::new(
                p,
                ca * a[0] + cb * b[0],
                ca * a[1] + cb * b[1],
                ca * a[2] + cb * b[2],
                ca * a[3] + cb * b[3],
            )
        };
        let v1 = comb(f1, 0.0);
        let v2 = comb(f2, f3);
        assert!((crate::metric::berger_ip(&p, &v1, &v1, &spec).unwrap() - 1.0).abs() <= 1e-12);
        assert!((crate::metric::berger_ip(&p, &v2, &v2, &spec).unwrap() - 1.0).abs() <= 1e-12);
        assert!(crate::metric::berger_ip(&p, &v1, &v2, &spec).unwrap().abs() <= 1e-12);
    }

    /// Closed-form frame components of B(∂α,∂α):
    /// b_Y = −rc·μν²cos(α+β)/D, b_Z = rc·μ²νsin(α+β)/D with rc = sinθcosθ
    /// (sinh·cosh on Σ³) and D = μ²sin²(α+β) + ν²cos²(α+β).
    fn b_alpha_closed(space: SpaceKind, params: &BergerParams, tp: &TorusPoint) -> YzComponents {
        let (c, s) = radial(space, tp.theta);
        let a = tp.alpha + tp.beta;
        let (mu, nu) = (params.mu(), params.nu());
        let d = mu * mu * a.sin() * a.sin() + nu * nu * a.cos() * a.cos();
        YzComponents {
            y: -s * c * mu * nu * nu * a.cos() / d,
            z: s * c * mu * mu * nu * a.sin() / d,
        }
    }

    #[test]
    fn second_ff_alpha_matches_closed_form() {
        let tp = TorusPoint::new(0.6, 0.7, -0.3);
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                let params = BergerParams::new(1.3, 0.8, 1.7).unwrap();
                let spec = ModelSpec::new(space, params, sig);
                let got = second_ff_alpha(&spec, &tp).unwrap();
                let want = b_alpha_closed(space, &params, &tp);
                assert!((got.y - want.y).abs() <= 1e-12, "{space} {sig}");
                assert!((got.z - want.z).abs() <= 1e-12, "{space} {sig}");
                // X- and N-components of the ambient vector vanish.
                let amb = second_ff_alpha_ambient(&spec, &tp).unwrap();
                let p = amb.base;
                let fr = frame_at(&p, &params, space).unwrap();
                assert!(berger_ip_raw(&p, &amb, &fr.x, &spec).abs() <= 1e-12);
                assert!(berger_ip_raw(&p, &amb, &fr.n, &spec).abs() <= 1e-12);
                // β-direction mirror.
                let beta = second_ff_beta(&spec, &tp).unwrap();
                assert!((beta.y + got.y).abs() <= 1e-12);
                assert!((beta.z + got.z).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn second_ff_unit_parameters() {
        // μ = ν = 1: B(∂α,∂α) = sinθcosθ(−cos(α+β)·Y + sin(α+β)·Z).
        let spec = rspec(SpaceKind::S3, 1.7, 1.0, 1.0);
        let tp = TorusPoint::new(0.5, 0.4, 0.25);
        let b = second_ff_alpha(&spec, &tp).unwrap();
        let sc = tp.theta.sin() * tp.theta.cos();
        let a = tp.alpha + tp.beta;
        assert!((b.y + sc * a.cos()).abs() <= 1e-13);
        assert!((b.z - sc * a.sin()).abs() <= 1e-13);
    }

    #[test]
    fn mean_curvature_examples() {
        // μ = ν: the Clifford torus θ = π/4 is minimal for any λ.
        let spec = rspec(SpaceKind::S3, 1.9, 1.0, 1.0);
        let sg = mean_curvature(&spec, &TorusPoint::new(FRAC_PI_4, 0.8, 2.3)).unwrap();
        assert!(sg.h_norm <= 1e-12);
        assert!(sg.minimal);
        // θ = π/8: ‖H‖ = 1/ tan(π/4) = 1.
        let sg = mean_curvature(&spec, &TorusPoint::new(PI / 8.0, 0.0, 0.0)).unwrap();
        assert!((sg.h_norm - 1.0).abs() <= 1e-12);
        assert!(!sg.minimal);
        // Σ³ at θ = ½ artanh(½): ‖H‖ = 2; never minimal.
        let sspec = rspec(SpaceKind::Sigma3, 1.0, 1.0, 1.0);
        let theta = 0.5 * 0.5f64.atanh();
        let sg = mean_curvature(&sspec, &TorusPoint::new(theta, 1.1, 0.3)).unwrap();
        assert!((sg.h_norm - 2.0).abs() <= 1e-12);
        assert!(!sg.minimal);
    }

    #[test]
    fn mean_curvature_matches_closed_norm_and_ignores_lambda() {
        let tp = TorusPoint::new(0.95, 2.1, -0.6);
        for space in [SpaceKind::S3, SpaceKind::Sigma3] {
            for sig in [Signature::RIEMANNIAN, Signature::LORENTZIAN] {
                let p1 = BergerParams::new(0.6, 1.8, 0.9).unwrap();
                let p2 = BergerParams::new(1.7, 1.8, 0.9).unwrap();
                let g1 = mean_curvature(&ModelSpec::new(space, p1, sig), &tp).unwrap();
                let g2 = mean_curvature(&ModelSpec::new(space, p2, sig), &tp).unwrap();
                let closed = h_norm_closed_form(space, &p1, &tp).unwrap();
                assert!((g1.h_norm - closed).abs() <= 1e-10);
                assert!((g1.h_norm - g2.h_norm).abs() <= 1e-12);
                assert!((g1.h.y - g2.h.y).abs() <= 1e-12);
                assert!((g1.h.z - g2.h.z).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn cmc_solver_s3() {
        let spec = rspec(SpaceKind::S3, 1.0, 1.0, 1.0);
        let sol = cmc_solve(&spec, 0.0).unwrap();
        assert_eq!(sol.thetas, vec![FRAC_PI_4]);
        let sol = cmc_solve(&spec, 1.0).unwrap();
        assert_eq!(sol.thetas.len(), 2);
        assert!((sol.thetas[0] - PI / 8.0).abs() <= 1e-12);
        assert!((sol.thetas[1] - 3.0 * PI / 8.0).abs() <= 1e-12);
        assert!(sol.thetas[0] < sol.thetas[1]);
    }

    #[test]
    fn cmc_solver_sigma3() {
        let spec = rspec(SpaceKind::Sigma3, 1.0, 1.0, 1.0);
        assert_eq!(cmc_solve(&spec, 0.5).unwrap_err().code(), "no_solution");
        assert_eq!(cmc_solve(&spec, 0.0).unwrap_err().code(), "no_solution");
        assert_eq!(cmc_solve(&spec, 1.0).unwrap_err().code(), "no_solution");
        let sol = cmc_solve(&spec, 2.0).unwrap();
        assert_eq!(sol.thetas.len(), 1);
        assert!((sol.thetas[0] - 0.5 * 0.5f64.atanh()).abs() <= 1e-14);
    }

    #[test]
    fn cmc_solver_requires_equal_mu_nu() {
        let spec = rspec(SpaceKind::S3, 1.0, 1.0, 1.5);
        assert_eq!(cmc_solve(&spec, 1.0).unwrap_err().code(), "hypothesis_violated");
    }

    #[test]
    fn cmc_bisection_agrees_with_closed_form() {
        for (space, targets) in [
            (SpaceKind::S3, vec![0.0, 0.08, 0.7, 3.5]),
            (SpaceKind::Sigma3, vec![1.3, 2.0, 9.0]),
        ] {
            for mu in [0.7, 1.0, 1.6] {
                let spec = rspec(space, 1.2, mu, mu);
                for &c in &targets {
                    let want = match cmc_solve(&spec, c / mu) {
                        Ok(s) => s,
                        Err(_) => continue,
                    };
                    let got = cmc_solve_bisection(&spec, c / mu).unwrap();
                    assert_eq!(got.thetas.len(), want.thetas.len());
                    for (a, b) in got.thetas.iter().zip(&want.thetas) {
                        assert!((a - b).abs() <= 1e-12, "{space} mu={mu} C={c}: {a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn sigma3_norm_exceeds_reciprocal_mu() {
        for mu in [0.5, 1.0, 2.0] {
            let spec = rspec(SpaceKind::Sigma3, 1.0, mu, mu);
            for theta in [0.05, 0.4, 1.1, 3.0] {
                let sg = mean_curvature(&spec, &TorusPoint::new(theta, 0.7, 0.1)).unwrap();
                assert!(sg.h_norm > 1.0 / mu);
            }
        }
    }
}
