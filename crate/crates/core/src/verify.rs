//! Finite-difference oracle and cross-check harness.
//!
//! Everything the other modules state in closed form is re-derived here
//! from numerical differentiation of the embeddings plus metric projections
//! alone, and compared entrywise. The harness never calls into the
//! closed-form second-fundamental-form path it is checking; it carries its
//! own copy of the orthogonal decomposition.
//!
//! Sampling is counter-based: every random draw is a pure function of
//! (seed, check name, case index, lane), so reports are identical across
//! runs, evaluation orders and thread counts.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::ambient::{frame_at, AmbientPoint, SpaceKind, TangentVector};
use crate::connection::{
    closed_form_connection, closed_form_curvature, curvature_numerator,
    curvature_numerator_with_table, koszul_connection, sign_region_boundary, sign_region_check,
    structure_constants, PlaneKind, RegionClass,
};
use crate::error::GeomError;
use crate::metric::{berger_ip, BergerParams, ModelSpec, Signature};
use crate::torus::{
    self, cmc_solve, cmc_solve_bisection, embed, first_fundamental_form,
    first_fundamental_form_via_metric, h_norm_closed_form, mean_curvature, partials,
    second_ff_alpha, second_ff_alpha_ambient, second_ff_beta, TorusPoint, YzComponents,
};

/// Step floor for plain second differences. Below this the ~eps/h² rounding
/// loss of the three-point stencil dominates its O(h²) truncation error.
pub const SECOND_DIFF_STEP_FLOOR: f64 = 2e-4;

/// Configuration of the finite-difference harness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdConfig {
    step: f64,
    samples: u64,
    seed: u64,
}

impl FdConfig {
    pub const DEFAULT_STEP: f64 = 1e-5;
    pub const MAX_STEP: f64 = 1e-2;

    pub fn new(step: f64, samples: u64, seed: u64) -> Result<Self, GeomError> {
        if !(step > 0.0 && step <= Self::MAX_STEP) {
            return Err(GeomError::InvalidFdConfig {
                reason: format!("step must lie in (0, {}], got {step}", Self::MAX_STEP),
            });
        }
        if samples == 0 {
            return Err(GeomError::InvalidFdConfig {
                reason: "samples must be at least 1".to_string(),
            });
        }
        Ok(Self { step, samples, seed })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl Default for FdConfig {
    fn default() -> Self {
        Self { step: Self::DEFAULT_STEP, samples: 1000, seed: 42 }
    }
}

/// Coordinate direction of a torus parametrisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialDir {
    Alpha,
    Beta,
    Theta,
}

/// One cross-check of the report.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub cases: u64,
    pub max_abs_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Checks documenting a known-inconsistent tabulated entry: they fail
    /// by design and do not count against the suite.
    pub expected_fail: bool,
}

/// Aggregate of all cross-checks, deterministic given the inputs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// True when every check that is not marked expected-fail passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.expected_fail)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| !c.passed && !c.expected_fail).collect()
    }
}

// ---------------------------------------------------------------------------
// Counter-based sampling

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a(label: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Deterministic sampler keyed by (seed, label, case, lane).
#[derive(Debug, Clone, Copy)]
pub struct Sampler {
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    /// Uniform draw in [0, 1).
    pub fn unit(&self, label: &str, case: u64, lane: u64) -> f64 {
        let key = splitmix64(self.seed ^ fnv1a(label));
        let mixed = splitmix64(
            key ^ case.wrapping_mul(0x9e37_79b9_7f4a_7c15)
                ^ lane.wrapping_mul(0xd134_2543_de82_ef95),
        );
        (mixed >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in [lo, hi).
    pub fn in_range(&self, label: &str, case: u64, lane: u64, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit(label, case, lane)
    }
}

// ---------------------------------------------------------------------------
// Finite differences of the embeddings

/// Central difference (embed(+step) − embed(−step)) / (2·step) along one
/// coordinate, anchored at the undisplaced point. θ-differencing requires a
/// margin of at least one step to the domain boundary; the displaced
/// embeddings report `DegenerateTorus` otherwise.
pub fn fd_partial(
    space: SpaceKind,
    tp: &TorusPoint,
    which: PartialDir,
    cfg: &FdConfig,
) -> Result<TangentVector, GeomError> {
    let p = embed(space, tp)?;
    let h = cfg.step();
    let displace = |sign: f64| match which {
        PartialDir::Alpha => TorusPoint::new(tp.theta, tp.alpha + sign * h, tp.beta),
        PartialDir::Beta => TorusPoint::new(tp.theta, tp.alpha, tp.beta + sign * h),
        PartialDir::Theta => TorusPoint::new(tp.theta + sign * h, tp.alpha, tp.beta),
    };
    let plus = embed(space, &displace(1.0))?;
    let minus = embed(space, &displace(-1.0))?;
    let mut v = [0.0; 4];
    for (slot, (a, b)) in v.iter_mut().zip(plus.coords().iter().zip(minus.coords())) {
        *slot = (a - b) / (2.0 * h);
    }
    Ok(TangentVector::from_components(p, v))
}

fn fd_second_partial(
    space: SpaceKind,
    tp: &TorusPoint,
    which: PartialDir,
    step: f64,
) -> Result<TangentVector, GeomError> {
    let p = embed(space, tp)?;
    let displace = |sign: f64| match which {
        PartialDir::Alpha => TorusPoint::new(tp.theta, tp.alpha + sign * step, tp.beta),
        PartialDir::Beta => TorusPoint::new(tp.theta, tp.alpha, tp.beta + sign * step),
        PartialDir::Theta => TorusPoint::new(tp.theta + sign * step, tp.alpha, tp.beta),
    };
    let plus = embed(space, &displace(1.0))?;
    let minus = embed(space, &displace(-1.0))?;
    let mid = p.coords();
    let mut v = [0.0; 4];
    for i in 0..4 {
        v[i] = (plus.coords()[i] - 2.0 * mid[i] + minus.coords()[i]) / (step * step);
    }
    Ok(TangentVector::from_components(p, v))
}

/// Plain second α-difference (embed(+step) − 2·embed(0) + embed(−step)) / step².
pub fn fd_second_partial_alpha(
    space: SpaceKind,
    tp: &TorusPoint,
    cfg: &FdConfig,
) -> Result<TangentVector, GeomError> {
    fd_second_partial(space, tp, PartialDir::Alpha, cfg.step())
}

// ---------------------------------------------------------------------------
// The harness's own mean-curvature pipeline (FD ingredients only)

struct FdSurface {
    b_alpha: YzComponents,
    b_beta: YzComponents,
    h_norm: f64,
}

/// Strips the torus-tangential part (2×2 Gram solve) and the manifold-normal
/// part from `w`, then reads off frame components. Independent twin of the
/// closed-form decomposition in `torus`.
fn fd_strip(
    spec: &ModelSpec,
    p: &AmbientPoint,
    da: &TangentVector,
    db: &TangentVector,
    w: &TangentVector,
) -> Result<(TangentVector, YzComponents), GeomError> {
    let e = berger_ip(p, da, da, spec)?;
    let f = berger_ip(p, da, db, spec)?;
    let g = berger_ip(p, db, db, spec)?;
    let det = e * g - f * f;
    if det.abs() < torus::DEGENERATE_DET_TOL {
        return Err(GeomError::DegenerateInducedMetric { det });
    }
    let wa = berger_ip(p, w, da, spec)?;
    let wb = berger_ip(p, w, db, spec)?;
    let a = (g * wa - f * wb) / det;
    let b = (e * wb - f * wa) / det;
    let n = TangentVector::from_components(*p, p.coords());
    let wn = berger_ip(p, w, &n, spec)?;
    let mut out = [0.0; 4];
    for i in 0..4 {
        out[i] = w.components()[i] - a * da.components()[i] - b * db.components()[i]
            - wn * n.components()[i];
    }
    let perp = TangentVector::from_components(*p, out);
    let fr = frame_at(p, &spec.params, spec.space)?;
    let yz = YzComponents {
        y: spec.signature.eps2() * berger_ip(p, &perp, &fr.y, spec)?,
        z: spec.signature.eps3() * berger_ip(p, &perp, &fr.z, spec)?,
    };
    Ok((perp, yz))
}

fn fd_surface(spec: &ModelSpec, tp: &TorusPoint, cfg: &FdConfig) -> Result<FdSurface, GeomError> {
    let p = embed(spec.space, tp)?;
    let da = fd_partial(spec.space, tp, PartialDir::Alpha, cfg)?;
    let db = fd_partial(spec.space, tp, PartialDir::Beta, cfg)?;
    let h2 = cfg.step().max(SECOND_DIFF_STEP_FLOOR);
    let wa = fd_second_partial(spec.space, tp, PartialDir::Alpha, h2)?;
    let wb = fd_second_partial(spec.space, tp, PartialDir::Beta, h2)?;
    let (_, b_alpha) = fd_strip(spec, &p, &da, &db, &wa)?;
    let (_, b_beta) = fd_strip(spec, &p, &da, &db, &wb)?;
    let e = berger_ip(&p, &da, &da, spec)?;
    let f = berger_ip(&p, &da, &db, spec)?;
    let g = berger_ip(&p, &db, &db, spec)?;
    let ratio = (g - e) / (e * g - f * f);
    let (hy, hz) = (0.5 * ratio * b_alpha.y, 0.5 * ratio * b_alpha.z);
    let norm_sq = spec.signature.eps2() * hy * hy + spec.signature.eps3() * hz * hz;
    Ok(FdSurface { b_alpha, b_beta, h_norm: norm_sq.abs().sqrt() })
}

/// Mean-curvature norm through the finite-difference pipeline alone:
/// FD partials, FD second differences and metric projections, never any
/// closed-form surface quantity.
pub fn fd_h_norm(spec: &ModelSpec, tp: &TorusPoint, cfg: &FdConfig) -> Result<f64, GeomError> {
    Ok(fd_surface(spec, tp, cfg)?.h_norm)
}

/// Euclidean magnitude of the normal-space part of the FD mixed second
/// derivative; B(∂α,∂β) in disguise, expected to vanish.
fn fd_mixed_normal_magnitude(
    spec: &ModelSpec,
    tp: &TorusPoint,
    cfg: &FdConfig,
) -> Result<f64, GeomError> {
    let p = embed(spec.space, tp)?;
    let h = cfg.step();
    let corner = |sa: f64, sb: f64| {
        embed(spec.space, &TorusPoint::new(tp.theta, tp.alpha + sa * h, tp.beta + sb * h))
    };
    let (pp, pm, mp, mm) = (corner(1.0, 1.0)?, corner(1.0, -1.0)?, corner(-1.0, 1.0)?, corner(-1.0, -1.0)?);
    let mut v = [0.0; 4];
    for i in 0..4 {
        v[i] = (pp.coords()[i] - pm.coords()[i] - mp.coords()[i] + mm.coords()[i])
            / (4.0 * h * h);
    }
    let w = TangentVector::from_components(p, v);
    let da = fd_partial(spec.space, tp, PartialDir::Alpha, cfg)?;
    let db = fd_partial(spec.space, tp, PartialDir::Beta, cfg)?;
    let (perp, _) = fd_strip(spec, &p, &da, &db, &w)?;
    let c = perp.components();
    Ok((c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]).sqrt())
}

// ---------------------------------------------------------------------------
// The suite

/// Closed-form frame components of B(∂α,∂α), the harness's reference:
/// b_Y = −rc·μν²cos(α+β)/D, b_Z = rc·μ²νsin(α+β)/D, where rc = sinθcosθ on
/// S³ and sinhθcoshθ on Σ³ and D = μ²sin²(α+β) + ν²cos²(α+β).
fn b_alpha_reference(space: SpaceKind, params: &BergerParams, tp: &TorusPoint) -> YzComponents {
    let rc = match space {
        SpaceKind::S3 => tp.theta.sin() * tp.theta.cos(),
        SpaceKind::Sigma3 => tp.theta.sinh() * tp.theta.cosh(),
    };
    let a = tp.alpha + tp.beta;
    let (mu, nu) = (params.mu(), params.nu());
    let d = mu * mu * a.sin() * a.sin() + nu * nu * a.cos() * a.cos();
    YzComponents {
        y: -rc * mu * nu * nu * a.cos() / d,
        z: rc * mu * mu * nu * a.sin() / d,
    }
}

struct Suite {
    cfg: FdConfig,
    sampler: Sampler,
    checks: Vec<CheckRecord>,
}

impl Suite {
    fn record(&mut self, name: String, cases: u64, tolerance: f64, expected_fail: bool, dev: f64) {
        self.checks.push(CheckRecord {
            name,
            cases,
            max_abs_deviation: dev,
            tolerance,
            passed: dev <= tolerance,
            expected_fail,
        });
    }

    fn sample_params(&self, label: &str, i: u64, fallback: &BergerParams) -> BergerParams {
        if i == 0 {
            return *fallback;
        }
        let draw = |lane| self.sampler.in_range(label, i, lane, 0.5, 2.0);
        BergerParams::new(draw(0), draw(1), draw(2)).expect("sampled weights are positive")
    }

    fn sample_tp(&self, label: &str, i: u64, space: SpaceKind) -> TorusPoint {
        let theta_hi = match space {
            SpaceKind::S3 => 1.35,
            SpaceKind::Sigma3 => 1.5,
        };
        self.sample_tp_capped(label, i, theta_hi)
    }

    fn sample_tp_capped(&self, label: &str, i: u64, theta_hi: f64) -> TorusPoint {
        TorusPoint::new(
            self.sampler.in_range(label, i, 3, 0.2, theta_hi),
            self.sampler.in_range(label, i, 4, 0.0, 2.0 * PI),
            self.sampler.in_range(label, i, 5, 0.0, 2.0 * PI),
        )
    }
}

/// Runs every cross-check for each given model and aggregates per-check
/// maximal deviations. Failures are recorded, never thrown; solver
/// refusals and wrong solution counts in the round-trip checks fold into
/// the deviation as sentinel value 1.0.
///
/// Parameter-sampling checks draw triples from [0.5, 2]³ with the model's
/// own weights as case 0, so the passed-in weights always participate.
pub fn run_suite(specs: &[ModelSpec], cfg: &FdConfig) -> VerificationReport {
    let mut suite = Suite { cfg: *cfg, sampler: Sampler::new(cfg.seed()), checks: Vec::new() };
    for spec in specs {
        case_checks(&mut suite, spec);
    }
    let mut seen = Vec::new();
    for spec in specs {
        if !seen.contains(&spec.space) {
            seen.push(spec.space);
            signature_invariance_check(&mut suite, spec.space);
        }
    }
    VerificationReport { checks: suite.checks }
}

fn case_checks(suite: &mut Suite, spec: &ModelSpec) {
    let case = spec.case_label();
    let n = suite.cfg.samples();
    let half = (n / 2).max(1);
    let tenth = (n / 10).max(1);

    frame_gram_check(suite, spec, &format!("{case}.frame_gram"), n);
    connection_axiom_checks(suite, spec, &case, n);
    if spec.signature.is_tabulated() {
        koszul_vs_closed_form_check(suite, spec, &format!("{case}.koszul_vs_closed_form"), n);
        curvature_checks(suite, spec, &case, n);
        sign_region_checks(suite, spec, &case, n, tenth);
    }
    fundamental_form_checks(suite, spec, &case, n);
    fd_derivative_checks(suite, spec, &case, n);
    if spec.signature.is_tabulated() {
        second_ff_checks(suite, spec, &case, n, half);
        h_norm_checks(suite, spec, &case, half);
        lambda_independence_check(suite, spec, &format!("{case}.lambda_independence"), n);
        if spec.space == SpaceKind::S3 {
            clifford_minimality_check(suite, spec, &format!("{case}.clifford_minimality"), n);
            cmc_bisection_check(suite, spec, &format!("{case}.cmc_bisection_agreement"), tenth);
        } else {
            lower_bound_check(suite, spec, &format!("{case}.h_norm_lower_bound"), n);
        }
        cmc_round_trip_check(suite, spec, &format!("{case}.cmc_round_trip"), n);
    }
    mixed_second_ff_check(suite, spec, &format!("{case}.second_ff_mixed_fd"), n);
}

fn frame_gram_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(label, i, &spec.params);
        let tp = suite.sample_tp(label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let p = embed(spec.space, &tp).expect("sampled theta is interior");
        let fr = frame_at(&p, &params, spec.space).expect("embedded point is on manifold");
        let basis = [fr.x, fr.y, fr.z, fr.n];
        let eps = spec.signature.eps();
        let want = [eps[0], eps[1], eps[2], 1.0];
        for (a, av) in basis.iter().enumerate() {
            for (b, bv) in basis.iter().enumerate() {
                let g = berger_ip(&p, av, bv, &model).expect("on manifold");
                let target = if a == b { want[a] } else { 0.0 };
                dev = dev.max((g - target).abs());
            }
        }
    }
    suite.record(label.to_string(), n, 1e-12, false, dev);
}

fn connection_axiom_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64) {
    let torsion_label = format!("{case}.torsion_free");
    let compat_label = format!("{case}.metric_compatibility");
    let mut torsion_dev: f64 = 0.0;
    let mut compat_dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&torsion_label, i, &spec.params);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let sc = structure_constants(&model);
        let t = koszul_connection(&sc, model.signature);
        let eps = model.signature.eps();
        for a in 0..3 {
            for b in 0..3 {
                for k in 0..3 {
                    torsion_dev = torsion_dev
                        .max((t.gamma[a][b][k] - t.gamma[b][a][k] - sc.c[a][b][k]).abs());
                    compat_dev = compat_dev
                        .max((eps[k] * t.gamma[a][b][k] + eps[b] * t.gamma[a][k][b]).abs());
                }
            }
        }
    }
    suite.record(torsion_label, n, 1e-14, false, torsion_dev);
    suite.record(compat_label, n, 1e-14, false, compat_dev);
}

fn koszul_vs_closed_form_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(label, i, &spec.params);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let koszul = koszul_connection(&structure_constants(&model), model.signature);
        let table = closed_form_connection(&model).expect("tabulated signature");
        dev = dev.max(koszul.max_abs_diff(&table));
    }
    suite.record(label.to_string(), n, 1e-12, false, dev);
}

fn curvature_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64) {
    // Planes whose tabulated closed form is consistent with the Koszul
    // route; the (Σ³, Riemannian, YZ) entry is tracked separately below.
    let sigma3_riemannian =
        spec.space == SpaceKind::Sigma3 && spec.signature == Signature::RIEMANNIAN;
    let trusted: &[PlaneKind] = if sigma3_riemannian {
        &[PlaneKind::XY, PlaneKind::XZ]
    } else {
        &[PlaneKind::XY, PlaneKind::XZ, PlaneKind::YZ]
    };

    let label = format!("{case}.curvature_vs_closed_form");
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&label, i, &spec.params);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        for &plane in trusted {
            let koszul = curvature_numerator(&model, plane);
            let table = closed_form_curvature(&model, plane).expect("tabulated");
            dev = dev.max((koszul - table).abs());
        }
    }
    suite.record(label, n, 1e-12, false, dev);

    // Dual route through the closed-form connection table, covering all
    // three planes; this is the authoritative check for the Σ³ YZ curvatures.
    let label = format!("{case}.curvature_table_route");
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&label, i, &spec.params);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let sc = structure_constants(&model);
        let table = closed_form_connection(&model).expect("tabulated");
        for plane in PlaneKind::ALL {
            let via_table = curvature_numerator_with_table(&table, &sc, model.signature, plane);
            dev = dev.max((curvature_numerator(&model, plane) - via_table).abs());
        }
    }
    suite.record(label, n, 1e-12, false, dev);

    if sigma3_riemannian {
        let label = format!("{case}.curvature_yz_verbatim_table");
        let mut dev: f64 = 0.0;
        for i in 0..n {
            let params = suite.sample_params(&label, i, &spec.params);
            let model = ModelSpec::new(spec.space, params, spec.signature);
            let koszul = curvature_numerator(&model, PlaneKind::YZ);
            let table = closed_form_curvature(&model, PlaneKind::YZ).expect("tabulated");
            dev = dev.max((koszul - table).abs());
        }
        suite.record(label, n, 1e-12, true, dev);
    }

    if spec.space == SpaceKind::S3 && spec.signature == Signature::RIEMANNIAN {
        let label = format!("{case}.round_sphere");
        let unit = ModelSpec::riemannian(SpaceKind::S3, BergerParams::unit());
        let mut dev: f64 = 0.0;
        for plane in PlaneKind::ALL {
            dev = dev.max((curvature_numerator(&unit, plane) - 1.0).abs());
        }
        suite.record(label, 1, 1e-12, false, dev);
    }
}

fn sign_region_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64, boundary_n: u64) {
    for plane in PlaneKind::ALL {
        let plane_tag = plane.to_string().to_lowercase();

        // Boundary samples: construct (μ, ν) satisfying the hypothesis with
        // a margin, set λ² exactly on the boundary, expect |K| tiny.
        let label = format!("{case}.sign_region_boundary_{plane_tag}");
        let mut dev: f64 = 0.0;
        for i in 0..boundary_n {
            let base = suite.sampler.in_range(&label, i, 0, 0.5, 1.4);
            let delta = suite.sampler.in_range(&label, i, 1, 0.1, 0.6);
            let (mu, nu) = match plane {
                PlaneKind::XY => (base, base + delta),
                PlaneKind::XZ => (base + delta, base),
                PlaneKind::YZ => (base, base + delta),
            };
            let probe = ModelSpec::new(
                spec.space,
                BergerParams::new(1.0, mu, nu).expect("positive"),
                spec.signature,
            );
            let Some(boundary) = sign_region_boundary(&probe, plane).expect("tabulated") else {
                dev = dev.max(1.0);
                continue;
            };
            let model = ModelSpec::new(
                spec.space,
                BergerParams::new(boundary.sqrt(), mu, nu).expect("positive"),
                spec.signature,
            );
            if sign_region_check(&model, plane).expect("tabulated") != RegionClass::OnBoundary {
                dev = dev.max(1.0);
            }
            dev = dev.max(curvature_numerator(&model, plane).abs());
        }
        suite.record(label, boundary_n, 1e-9, false, dev);

        // Interior samples: classification must agree with the sign of K
        // outside the |K| ≤ 1e−10 band. Deviation counts mismatches.
        let label = format!("{case}.sign_region_interior_{plane_tag}");
        let mut mismatches = 0u64;
        for i in 0..n {
            let params = suite.sample_params(&label, i, &spec.params);
            let model = ModelSpec::new(spec.space, params, spec.signature);
            let k = curvature_numerator(&model, plane);
            if k.abs() <= 1e-10 {
                continue;
            }
            match sign_region_check(&model, plane).expect("tabulated") {
                RegionClass::InRegion if k > 0.0 => mismatches += 1,
                RegionClass::Outside if k < 0.0 => mismatches += 1,
                _ => {}
            }
        }
        suite.record(label, n, 0.0, false, mismatches as f64);
    }
}

fn fundamental_form_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64) {
    let id_label = format!("{case}.fundamental_form_identities");
    let ip_label = format!("{case}.fundamental_form_vs_metric");
    let mut id_dev: f64 = 0.0;
    let mut ip_dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&id_label, i, &spec.params);
        let tp = suite.sample_tp(&id_label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let ff = first_fundamental_form(&model, &tp).expect("interior theta");
        let l2 = model.signature.eps1() * params.lambda() * params.lambda();
        match spec.space {
            SpaceKind::S3 => {
                let (c2, s2) = (tp.theta.cos().powi(2), tp.theta.sin().powi(2));
                id_dev = id_dev.max((ff.f + ff.e - l2 * c2).abs());
                id_dev = id_dev.max((ff.f + ff.g - l2 * s2).abs());
                id_dev = id_dev.max((ff.g - ff.e - l2 * (s2 - c2)).abs());
            }
            SpaceKind::Sigma3 => {
                let (c2, s2) = (tp.theta.cosh().powi(2), tp.theta.sinh().powi(2));
                id_dev = id_dev.max((ff.f + ff.e - l2 * c2).abs());
                id_dev = id_dev.max((ff.f + ff.g + l2 * s2).abs());
                id_dev = id_dev.max((ff.g - ff.e + l2 * (c2 + s2)).abs());
            }
        }
        let via = first_fundamental_form_via_metric(&model, &tp).expect("interior theta");
        ip_dev = ip_dev.max((ff.e - via.e).abs());
        ip_dev = ip_dev.max((ff.f - via.f).abs());
        ip_dev = ip_dev.max((ff.g - via.g).abs());
    }
    suite.record(id_label, n, 1e-12, false, id_dev);
    suite.record(ip_label, n, 1e-12, false, ip_dev);
}

fn fd_derivative_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64) {
    let first_label = format!("{case}.fd_first_partials");
    let second_label = format!("{case}.fd_second_alpha");
    let mut first_dev: f64 = 0.0;
    let mut second_dev: f64 = 0.0;
    // The 1e−5 budget of the plain second difference assumes O(1)
    // embedding components; keep cosh θ ≈ 1.5 or less so the ~eps·|f|/h²
    // rounding floor stays under it for every seed.
    let theta_hi = match spec.space {
        SpaceKind::S3 => 1.35,
        SpaceKind::Sigma3 => 1.0,
    };
    for i in 0..n {
        let tp = suite.sample_tp_capped(&first_label, i, theta_hi);
        let closed = partials(spec.space, &tp).expect("interior theta");
        for (dir, want) in [
            (PartialDir::Alpha, closed.d_alpha),
            (PartialDir::Beta, closed.d_beta),
            (PartialDir::Theta, closed.d_theta),
        ] {
            let got = fd_partial(spec.space, &tp, dir, &suite.cfg).expect("margin holds");
            for (a, b) in got.components().iter().zip(want.components()) {
                first_dev = first_dev.max((a - b).abs());
            }
        }
        let got = fd_second_partial_alpha(spec.space, &tp, &suite.cfg).expect("interior theta");
        let radial = match spec.space {
            SpaceKind::S3 => tp.theta.cos(),
            SpaceKind::Sigma3 => tp.theta.cosh(),
        };
        let want = [-radial * tp.alpha.cos(), -radial * tp.alpha.sin(), 0.0, 0.0];
        for (a, b) in got.components().iter().zip(want) {
            second_dev = second_dev.max((a - b).abs());
        }
    }
    suite.record(first_label, n, 1e-9, false, first_dev);
    suite.record(second_label, n, 1e-5, false, second_dev);
}

fn second_ff_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, n: u64, half: u64) {
    let xn_label = format!("{case}.second_ff_xn_components");
    let cf_label = format!("{case}.second_ff_vs_closed_form");
    let anti_label = format!("{case}.second_ff_beta_antisymmetry");
    let mut xn_dev: f64 = 0.0;
    let mut cf_dev: f64 = 0.0;
    let mut anti_dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&cf_label, i, &spec.params);
        let tp = suite.sample_tp(&cf_label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let amb = second_ff_alpha_ambient(&model, &tp).expect("interior theta");
        let p = amb.base;
        let fr = frame_at(&p, &params, spec.space).expect("on manifold");
        xn_dev = xn_dev.max(berger_ip(&p, &amb, &fr.x, &model).expect("on manifold").abs());
        xn_dev = xn_dev.max(berger_ip(&p, &amb, &fr.n, &model).expect("on manifold").abs());
        let got = second_ff_alpha(&model, &tp).expect("interior theta");
        let want = b_alpha_reference(spec.space, &params, &tp);
        cf_dev = cf_dev.max((got.y - want.y).abs()).max((got.z - want.z).abs());
        let beta = second_ff_beta(&model, &tp).expect("interior theta");
        anti_dev = anti_dev.max((beta.y + got.y).abs()).max((beta.z + got.z).abs());
    }
    suite.record(xn_label, n, 1e-12, false, xn_dev);
    suite.record(cf_label, n, 1e-12, false, cf_dev);
    suite.record(anti_label, n, 1e-12, false, anti_dev);

    let fd_label = format!("{case}.second_ff_fd");
    let fd_anti_label = format!("{case}.second_ff_beta_fd");
    let mut fd_dev: f64 = 0.0;
    let mut fd_anti_dev: f64 = 0.0;
    for i in 0..half {
        let params = suite.sample_params(&fd_label, i, &spec.params);
        let tp = suite.sample_tp(&fd_label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let surf = fd_surface(&model, &tp, &suite.cfg).expect("interior theta");
        let want = b_alpha_reference(spec.space, &params, &tp);
        fd_dev = fd_dev.max((surf.b_alpha.y - want.y).abs());
        fd_dev = fd_dev.max((surf.b_alpha.z - want.z).abs());
        fd_anti_dev = fd_anti_dev.max((surf.b_beta.y + surf.b_alpha.y).abs());
        fd_anti_dev = fd_anti_dev.max((surf.b_beta.z + surf.b_alpha.z).abs());
    }
    suite.record(fd_label, half, 1e-6, false, fd_dev);
    suite.record(fd_anti_label, half, 1e-6, false, fd_anti_dev);
}

fn mixed_second_ff_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(label, i, &spec.params);
        let tp = suite.sample_tp(label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        dev = dev.max(fd_mixed_normal_magnitude(&model, &tp, &suite.cfg).expect("interior"));
    }
    suite.record(label.to_string(), n, 1e-7, false, dev);
}

fn h_norm_checks(suite: &mut Suite, spec: &ModelSpec, case: &str, half: u64) {
    let pipe_label = format!("{case}.h_norm_pipeline");
    let fd_label = format!("{case}.h_norm_fd_pipeline");
    let mut pipe_dev: f64 = 0.0;
    let mut fd_dev: f64 = 0.0;
    for i in 0..half {
        let params = suite.sample_params(&pipe_label, i, &spec.params);
        let tp = suite.sample_tp(&pipe_label, i, spec.space);
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let closed = h_norm_closed_form(spec.space, &params, &tp).expect("interior theta");
        let sg = mean_curvature(&model, &tp).expect("interior theta");
        pipe_dev = pipe_dev.max((sg.h_norm - closed).abs());
        let surf = fd_surface(&model, &tp, &suite.cfg).expect("interior theta");
        fd_dev = fd_dev.max((surf.h_norm - closed).abs());
    }
    suite.record(pipe_label, half, 1e-10, false, pipe_dev);
    suite.record(fd_label, half, 1e-6, false, fd_dev);
}

fn lambda_independence_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(label, i, &spec.params);
        let lambda2 = suite.sampler.in_range(label, i, 6, 0.5, 2.0);
        let other = BergerParams::new(lambda2, params.mu(), params.nu()).expect("positive");
        let tp = suite.sample_tp(label, i, spec.space);
        let a = mean_curvature(&ModelSpec::new(spec.space, params, spec.signature), &tp)
            .expect("interior theta");
        let b = mean_curvature(&ModelSpec::new(spec.space, other, spec.signature), &tp)
            .expect("interior theta");
        dev = dev.max((a.h.y - b.h.y).abs());
        dev = dev.max((a.h.z - b.h.z).abs());
        dev = dev.max((a.h_norm - b.h_norm).abs());
    }
    suite.record(label.to_string(), n, 1e-12, false, dev);
}

fn clifford_minimality_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(label, i, &spec.params);
        let tp = TorusPoint::new(
            FRAC_PI_4,
            suite.sampler.in_range(label, i, 4, 0.0, 2.0 * PI),
            suite.sampler.in_range(label, i, 5, 0.0, 2.0 * PI),
        );
        // H ∝ cot 2θ vanishes at θ = π/4 for every weight triple.
        let sg = mean_curvature(&ModelSpec::new(spec.space, params, spec.signature), &tp)
            .expect("interior theta");
        dev = dev.max(sg.h_norm);
    }
    suite.record(label.to_string(), n, 1e-12, false, dev);
}

fn lower_bound_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let mu = suite.sampler.in_range(label, i, 0, 0.5, 2.0);
        let params = BergerParams::new(1.0, mu, mu).expect("positive");
        let tp = suite.sample_tp(label, i, SpaceKind::Sigma3);
        let sg = mean_curvature(&ModelSpec::new(spec.space, params, spec.signature), &tp)
            .expect("interior theta");
        dev = dev.max((1.0 / mu - sg.h_norm).max(0.0));
    }
    suite.record(label.to_string(), n, 0.0, false, dev);
}

fn cmc_round_trip_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let mu = suite.sampler.in_range(label, i, 0, 0.5, 2.0);
        let params = BergerParams::new(1.0, mu, mu).expect("positive");
        let model = ModelSpec::new(spec.space, params, spec.signature);
        match spec.space {
            SpaceKind::S3 => {
                let target = if i % 7 == 0 {
                    0.0
                } else {
                    suite.sampler.in_range(label, i, 1, 0.05, 5.0)
                };
                match cmc_solve(&model, target) {
                    Ok(sol) => {
                        let expected = if target == 0.0 { 1 } else { 2 };
                        if sol.thetas.len() != expected {
                            dev = dev.max(1.0);
                        }
                        for &theta in &sol.thetas {
                            let sg = mean_curvature(&model, &TorusPoint::new(theta, 0.0, 0.0))
                                .expect("interior theta");
                            dev = dev.max((sg.h_norm - target).abs());
                        }
                    }
                    Err(_) => dev = dev.max(1.0),
                }
            }
            SpaceKind::Sigma3 => {
                if i % 5 == 0 {
                    // Unattainable targets must be refused.
                    let target = suite.sampler.in_range(label, i, 1, 0.0, 1.0) / mu;
                    if cmc_solve(&model, target).is_ok() {
                        dev = dev.max(1.0);
                    }
                } else {
                    let target =
                        1.0 / mu + suite.sampler.in_range(label, i, 1, 0.02, 5.0);
                    match cmc_solve(&model, target) {
                        Ok(sol) => {
                            if sol.thetas.len() != 1 {
                                dev = dev.max(1.0);
                            }
                            for &theta in &sol.thetas {
                                let sg = mean_curvature(&model, &TorusPoint::new(theta, 0.0, 0.0))
                                    .expect("interior theta");
                                dev = dev.max((sg.h_norm - target).abs());
                            }
                        }
                        Err(_) => dev = dev.max(1.0),
                    }
                }
            }
        }
    }
    suite.record(label.to_string(), n, 1e-10, false, dev);
}

fn cmc_bisection_check(suite: &mut Suite, spec: &ModelSpec, label: &str, n: u64) {
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let mu = suite.sampler.in_range(label, i, 0, 0.5, 2.0);
        let params = BergerParams::new(1.0, mu, mu).expect("positive");
        let model = ModelSpec::new(spec.space, params, spec.signature);
        let target = suite.sampler.in_range(label, i, 1, 0.05, 5.0);
        match (cmc_solve(&model, target), cmc_solve_bisection(&model, target)) {
            (Ok(a), Ok(b)) if a.thetas.len() == b.thetas.len() => {
                for (x, y) in a.thetas.iter().zip(&b.thetas) {
                    dev = dev.max((x - y).abs());
                }
            }
            _ => dev = dev.max(1.0),
        }
    }
    suite.record(label.to_string(), n, 1e-12, false, dev);
}

fn signature_invariance_check(suite: &mut Suite, space: SpaceKind) {
    let label = format!("{space}.trace_signature_invariance");
    let n = (suite.cfg.samples() / 2).max(1);
    let mut dev: f64 = 0.0;
    for i in 0..n {
        let params = suite.sample_params(&label, i, &BergerParams::unit());
        let tp = suite.sample_tp(&label, i, space);
        let r = mean_curvature(&ModelSpec::riemannian(space, params), &tp)
            .expect("interior theta");
        let l = mean_curvature(&ModelSpec::lorentzian(space, params), &tp)
            .expect("interior theta");
        dev = dev.max((r.trace_b.y - l.trace_b.y).abs());
        dev = dev.max((r.trace_b.z - l.trace_b.z).abs());
        dev = dev.max((r.h.y - l.h.y).abs());
        dev = dev.max((r.h.z - l.h.z).abs());
        dev = dev.max((r.h_norm - l.h_norm).abs());
    }
    suite.record(label, n, 1e-9, false, dev);
}
