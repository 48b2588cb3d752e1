//! `berger` — CLI for connections, curvatures and CMC tori of the
//! generalised Berger metric families on S³ and Σ³.
//!
//! Exit codes: 0 success, 1 usage/flag error, 2 domain error
//! (degenerate/no-solution/unsupported), 3 verification failure.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};

use berger_core::connection::{
    closed_form_connection, curvature_numerator, koszul_connection, sectional_curvature,
    sign_region_check, structure_constants, ConnectionTable, PlaneKind,
};
use berger_core::metric::{BergerParams, ModelSpec, Signature};
use berger_core::torus::{cmc_solve, mean_curvature, TorusPoint};
use berger_core::verify::{run_suite, FdConfig, VerificationReport};
use berger_core::{GeomError, SpaceKind};

use output::{fmt_f64, Json};

#[derive(Parser)]
#[command(
    name = "berger",
    version,
    about = "Connections, curvatures and constant-mean-curvature tori \
             of the generalised Berger metrics on S3 and its dual",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Levi-Civita connection table gamma[i][j][k].
    Connection(ConnectionArgs),
    /// Print frame sectional curvatures and sign-region classification.
    Curvature(CurvatureArgs),
    /// Fundamental forms, second fundamental form and mean curvature at a torus point.
    MeanCurvature(MeanCurvatureArgs),
    /// Solve for tori of constant mean curvature norm.
    CmcSolve(CmcArgs),
    /// Run the full finite-difference verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    S3,
    Sigma3,
}

impl From<SpaceArg> for SpaceKind {
    fn from(value: SpaceArg) -> Self {
        match value {
            SpaceArg::S3 => SpaceKind::S3,
            SpaceArg::Sigma3 => SpaceKind::Sigma3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Koszul,
    ClosedForm,
    Both,
}

#[derive(Args)]
struct ModelArgs {
    /// Ambient space.
    #[arg(long, value_enum, default_value = "s3")]
    space: SpaceArg,
    /// Signature as three comma-separated signs, e.g. `-,+,+`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["riemannian", "lorentzian"])]
    sig: Option<String>,
    /// Shorthand for `--sig +,+,+` (the default).
    #[arg(long)]
    riemannian: bool,
    /// Shorthand for `--sig -,+,+`.
    #[arg(long, conflicts_with = "riemannian")]
    lorentzian: bool,
    /// Metric weight λ.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
    /// Metric weight μ.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    mu: f64,
    /// Metric weight ν.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    nu: f64,
}

#[derive(Args)]
struct CommonArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args)]
struct ConnectionArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which route computes the table; `both` also reports the max deviation.
    #[arg(long, value_enum, default_value = "koszul")]
    method: MethodArg,
}

#[derive(Args)]
struct CurvatureArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MeanCurvatureArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Torus parameter θ (radians).
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// Angle α (radians).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    alpha: f64,
    /// Angle β (radians).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    beta: f64,
}

#[derive(Args)]
struct CmcArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Target mean curvature norm C ≥ 0.
    #[arg(long, allow_hyphen_values = true)]
    target: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Random cases per check.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Seed of the counter-based sampler.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Central-difference step, in (0, 1e-2].
    #[arg(long, default_value_t = 1e-5, allow_hyphen_values = true)]
    step: f64,
}

fn main() {
    std::process::exit(run());
}

/// Writes to stdout, dying quietly with the conventional SIGPIPE status
/// when the consumer has closed the pipe.
fn out(text: std::fmt::Arguments) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if write!(lock, "{text}").and_then(|_| lock.flush()).is_err() {
        std::process::exit(141);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { out(format_args!("{}\n", format_args!($($arg)*))) };
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Connection(args) => cmd_connection(args),
        Command::Curvature(args) => cmd_curvature(args),
        Command::MeanCurvature(args) => cmd_mean_curvature(args),
        Command::CmcSolve(args) => cmd_cmc_solve(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Resolves the model flags; signature parse failures are usage errors.
fn resolve_model(args: &ModelArgs) -> Result<Result<ModelSpec, GeomError>, String> {
    let signature = if args.lorentzian {
        Signature::LORENTZIAN
    } else if let Some(text) = &args.sig {
        text.parse::<Signature>()?
    } else {
        Signature::RIEMANNIAN
    };
    let params = match BergerParams::new(args.lambda, args.mu, args.nu) {
        Ok(params) => params,
        Err(err) => return Ok(Err(err)),
    };
    Ok(Ok(ModelSpec::new(args.space.into(), params, signature)))
}

fn model_inputs(spec: &ModelSpec) -> Json {
    Json::obj([
        ("space", Json::str(spec.space.to_string())),
        ("signature", Json::str(spec.signature.to_string())),
        ("lambda", Json::num(spec.params.lambda())),
        ("mu", Json::num(spec.params.mu())),
        ("nu", Json::num(spec.params.nu())),
    ])
}

fn raw_model_inputs(args: &ModelArgs) -> Json {
    let sig = if args.lorentzian {
        Signature::LORENTZIAN.to_string()
    } else if let Some(s) = &args.sig {
        s.clone()
    } else {
        Signature::RIEMANNIAN.to_string()
    };
    Json::obj([
        ("space", Json::str(SpaceKind::from(args.space).to_string())),
        ("signature", Json::str(sig)),
        ("lambda", Json::num(args.lambda)),
        ("mu", Json::num(args.mu)),
        ("nu", Json::num(args.nu)),
    ])
}

fn emit_success(format: FormatArg, inputs: Json, results: Json, csv: String) -> i32 {
    match format {
        FormatArg::Json => {
            let doc = Json::obj([
                ("inputs", inputs),
                ("results", results),
                ("errors", Json::Arr(Vec::new())),
            ]);
            outln!("{}", doc.render());
        }
        FormatArg::Csv => out(format_args!("{csv}")),
    }
    0
}

fn emit_domain_error(format: FormatArg, inputs: Json, err: &GeomError) -> i32 {
    match format {
        FormatArg::Json => {
            let doc = Json::obj([
                ("inputs", inputs),
                ("results", Json::Obj(Vec::new())),
                (
                    "errors",
                    Json::Arr(vec![Json::obj([
                        ("code", Json::str(err.code())),
                        ("message", Json::str(err.to_string())),
                    ])]),
                ),
            ]);
            outln!("{}", doc.render());
        }
        FormatArg::Csv => {
            outln!("error_code,message");
            outln!("{},{:?}", err.code(), err.to_string());
        }
    }
    2
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    1
}

const FRAME: [&str; 3] = ["X", "Y", "Z"];

fn table_json(table: &ConnectionTable) -> Json {
    Json::Arr(
        (0..3)
            .map(|i| {
                Json::Arr(
                    (0..3)
                        .map(|j| {
                            Json::Arr((0..3).map(|k| Json::num(table.gamma[i][j][k])).collect())
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn cmd_connection(args: ConnectionArgs) -> i32 {
    let spec = match resolve_model(&args.common.model) {
        Ok(Ok(spec)) => spec,
        Ok(Err(err)) => {
            let inputs = raw_model_inputs(&args.common.model);
            return emit_domain_error(args.common.format, inputs, &err);
        }
        Err(message) => return usage_error(&message),
    };
    let inputs = model_inputs(&spec);
    let koszul = koszul_connection(&structure_constants(&spec), spec.signature);
    let closed = match args.method {
        MethodArg::Koszul => None,
        MethodArg::ClosedForm | MethodArg::Both => match closed_form_connection(&spec) {
            Ok(table) => Some(table),
            Err(err) => return emit_domain_error(args.common.format, inputs, &err),
        },
    };
    let (method, results, csv) = match args.method {
        MethodArg::Koszul => {
            ("koszul", vec![("gamma", table_json(&koszul))], connection_csv(&koszul, None))
        }
        MethodArg::ClosedForm => {
            let table = closed.expect("checked above");
            ("closed-form", vec![("gamma", table_json(&table))], connection_csv(&table, None))
        }
        MethodArg::Both => {
            let table = closed.expect("checked above");
            let dev = koszul.max_abs_diff(&table);
            (
                "both",
                vec![
                    ("gamma", table_json(&koszul)),
                    ("gamma_closed_form", table_json(&table)),
                    ("max_abs_deviation", Json::num(dev)),
                ],
                connection_csv(&koszul, Some(&table)),
            )
        }
    };
    let mut fields = vec![("method", Json::str(method))];
    fields.extend(results);
    emit_success(args.common.format, inputs, Json::obj(fields), csv)
}

fn connection_csv(table: &ConnectionTable, closed: Option<&ConnectionTable>) -> String {
    let mut out = String::new();
    if closed.is_some() {
        out.push_str("i,j,k,gamma_koszul,gamma_closed_form\n");
    } else {
        out.push_str("i,j,k,gamma\n");
    }
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out.push_str(&format!(
                    "{},{},{},{}",
                    FRAME[i],
                    FRAME[j],
                    FRAME[k],
                    fmt_f64(table.gamma[i][j][k])
                ));
                if let Some(other) = closed {
                    out.push_str(&format!(",{}", fmt_f64(other.gamma[i][j][k])));
                }
                out.push('\n');
            }
        }
    }
    out
}

fn cmd_curvature(args: CurvatureArgs) -> i32 {
    let spec = match resolve_model(&args.common.model) {
        Ok(Ok(spec)) => spec,
        Ok(Err(err)) => {
            let inputs = raw_model_inputs(&args.common.model);
            return emit_domain_error(args.common.format, inputs, &err);
        }
        Err(message) => return usage_error(&message),
    };
    let inputs = model_inputs(&spec);
    let mut planes = Vec::new();
    let mut csv = String::from("plane,curvature_numerator,sectional_curvature,sign_region\n");
    for plane in PlaneKind::ALL {
        let numerator = curvature_numerator(&spec, plane);
        let sectional = sectional_curvature(&spec, plane);
        // Sign regions exist only for the tabulated signatures.
        let region = sign_region_check(&spec, plane)
            .map(|r| r.to_string())
            .unwrap_or_else(|_| "unsupported".to_string());
        csv.push_str(&format!(
            "{},{},{},{}\n",
            plane,
            fmt_f64(numerator),
            fmt_f64(sectional),
            region
        ));
        planes.push(Json::obj([
            ("plane", Json::str(plane.to_string())),
            ("curvature_numerator", Json::num(numerator)),
            ("sectional_curvature", Json::num(sectional)),
            ("sign_region", Json::str(region)),
        ]));
    }
    emit_success(
        args.common.format,
        inputs,
        Json::obj([("planes", Json::Arr(planes))]),
        csv,
    )
}

fn cmd_mean_curvature(args: MeanCurvatureArgs) -> i32 {
    let spec = match resolve_model(&args.common.model) {
        Ok(Ok(spec)) => spec,
        Ok(Err(err)) => {
            let inputs = raw_model_inputs(&args.common.model);
            return emit_domain_error(args.common.format, inputs, &err);
        }
        Err(message) => return usage_error(&message),
    };
    let tp = TorusPoint::new(args.theta, args.alpha, args.beta);
    let point_inputs = |inputs: Json| match inputs {
        Json::Obj(mut fields) => {
            fields.push(("theta".into(), Json::num(tp.theta)));
            fields.push(("alpha".into(), Json::num(tp.alpha)));
            fields.push(("beta".into(), Json::num(tp.beta)));
            Json::Obj(fields)
        }
        other => other,
    };
    let inputs = point_inputs(model_inputs(&spec));
    let sg = match mean_curvature(&spec, &tp) {
        Ok(sg) => sg,
        Err(err) => return emit_domain_error(args.common.format, inputs, &err),
    };
    let results = Json::obj([
        ("e", Json::num(sg.form.e)),
        ("f", Json::num(sg.form.f)),
        ("g", Json::num(sg.form.g)),
        ("b_alpha_y", Json::num(sg.b_alpha.y)),
        ("b_alpha_z", Json::num(sg.b_alpha.z)),
        ("trace_b_y", Json::num(sg.trace_b.y)),
        ("trace_b_z", Json::num(sg.trace_b.z)),
        ("h_y", Json::num(sg.h.y)),
        ("h_z", Json::num(sg.h.z)),
        ("h_norm", Json::num(sg.h_norm)),
        ("minimal", Json::Bool(sg.minimal)),
    ]);
    let csv = format!(
        "e,f,g,b_alpha_y,b_alpha_z,trace_b_y,trace_b_z,h_y,h_z,h_norm,minimal\n{},{},{},{},{},{},{},{},{},{},{}\n",
        fmt_f64(sg.form.e),
        fmt_f64(sg.form.f),
        fmt_f64(sg.form.g),
        fmt_f64(sg.b_alpha.y),
        fmt_f64(sg.b_alpha.z),
        fmt_f64(sg.trace_b.y),
        fmt_f64(sg.trace_b.z),
        fmt_f64(sg.h.y),
        fmt_f64(sg.h.z),
        fmt_f64(sg.h_norm),
        sg.minimal,
    );
    emit_success(args.common.format, inputs, results, csv)
}

fn cmd_cmc_solve(args: CmcArgs) -> i32 {
    let spec = match resolve_model(&args.common.model) {
        Ok(Ok(spec)) => spec,
        Ok(Err(err)) => {
            let inputs = raw_model_inputs(&args.common.model);
            return emit_domain_error(args.common.format, inputs, &err);
        }
        Err(message) => return usage_error(&message),
    };
    let with_target = |inputs: Json| match inputs {
        Json::Obj(mut fields) => {
            fields.push(("target".into(), Json::num(args.target)));
            Json::Obj(fields)
        }
        other => other,
    };
    let inputs = with_target(model_inputs(&spec));
    let sol = match cmc_solve(&spec, args.target) {
        Ok(sol) => sol,
        Err(err) => return emit_domain_error(args.common.format, inputs, &err),
    };
    let results = Json::obj([(
        "thetas",
        Json::Arr(sol.thetas.iter().map(|&t| Json::num(t)).collect()),
    )]);
    let mut csv = String::from("index,theta\n");
    for (i, theta) in sol.thetas.iter().enumerate() {
        csv.push_str(&format!("{i},{}\n", fmt_f64(*theta)));
    }
    emit_success(args.common.format, inputs, results, csv)
}

fn report_json(report: &VerificationReport) -> Json {
    Json::obj([
        ("all_passed", Json::Bool(report.all_passed())),
        (
            "checks",
            Json::Arr(
                report
                    .checks
                    .iter()
                    .map(|c| {
                        Json::obj([
                            ("name", Json::str(c.name.clone())),
                            ("cases", Json::Int(c.cases)),
                            ("max_abs_deviation", Json::num(c.max_abs_deviation)),
                            ("tolerance", Json::num(c.tolerance)),
                            ("passed", Json::Bool(c.passed)),
                            ("expected_fail", Json::Bool(c.expected_fail)),
                        ])
                    })
                    .collect(),
            ),
        ),
    ])
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let cfg = match FdConfig::new(args.step, args.samples, args.seed) {
        Ok(cfg) => cfg,
        Err(err) => return usage_error(&err.to_string()),
    };
    let specs = ModelSpec::tabulated_cases();
    let report = run_suite(&specs, &cfg);
    let inputs = Json::obj([
        ("samples", Json::Int(args.samples)),
        ("seed", Json::Int(args.seed)),
        ("step", Json::num(args.step)),
    ]);
    match args.format {
        FormatArg::Json => {
            let doc = Json::obj([
                ("inputs", inputs),
                ("results", report_json(&report)),
                ("errors", Json::Arr(Vec::new())),
            ]);
            outln!("{}", doc.render());
        }
        FormatArg::Csv => {
            outln!("name,cases,max_abs_deviation,tolerance,passed,expected_fail");
            for c in &report.checks {
                outln!(
                    "{},{},{},{},{},{}",
                    c.name,
                    c.cases,
                    fmt_f64(c.max_abs_deviation),
                    fmt_f64(c.tolerance),
                    c.passed,
                    c.expected_fail
                );
            }
        }
    }
    if report.all_passed() {
        0
    } else {
        3
    }
}
