//! Command-line front end: conversions, scattering sweeps, propagator
//! grids, Born-series tables, and the verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 non-representable conversion,
//! 3 verification failure.

// negated comparisons like !(t > s) are deliberate: they reject NaN too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use pointkernel::born::{closed_form_state, BornSeries};
use pointkernel::convert::{
    from_connected, from_separated, separated_indicator, to_connected, to_separated, ConnectedSae,
    RobinPair, SeparatedCase, SeparatedSae,
};
use pointkernel::error::Error;
use pointkernel::interaction::{check_jump_average, PointInteraction};
use pointkernel::propagator::{delta_prime_propagator, propagator_boundary_data, Probe, TimeAxis};
use pointkernel::scatter::{
    check_griffiths_form, scattering, solve_stationary, super_singular_interaction, Direction,
    SuperSingularSpec,
};
use pointkernel::verify::{
    fd_boundary_check, integral_equation_residual, layer_jump_check, JumpProbe, PolynomialDensity,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_NOT_REPRESENTABLE: i32 = 2;
const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "pointkernel",
    version,
    about = "One-dimensional point interactions: conversions, scattering, propagators, Born series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert couplings to/from connected and separated boundary-condition forms (JSON)
    Convert(ConvertArgs),
    /// Sweep the scattering matrix over a wavenumber range (CSV)
    Scatter(ScatterArgs),
    /// Evaluate the delta-prime propagator on a grid (CSV)
    Propagator(PropagatorArgs),
    /// Print Born-series terms and partial-sum errors against the closed form (CSV)
    Born(BornArgs),
    /// Run the numerical verification suites
    Verify(VerifyArgs),
    /// Print the energy-dependent couplings and S-matrix of a delta-derivative interaction (JSON)
    Supersingular(SuperArgs),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CouplingArgs {
    /// Delta coupling c1
    #[arg(long, default_value_t = 0.0)]
    c1: f64,
    /// Real part of the delta-prime coupling c2
    #[arg(long, default_value_t = 0.0)]
    c2re: f64,
    /// Imaginary part of the delta-prime coupling c2
    #[arg(long, default_value_t = 0.0)]
    c2im: f64,
    /// Sandwiched-derivative coupling c3
    #[arg(long, default_value_t = 0.0)]
    c3: f64,
}

impl CouplingArgs {
    fn interaction(&self) -> PointInteraction {
        PointInteraction::new(self.c1, Complex64::new(self.c2re, self.c2im), self.c3)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetForm {
    Connected,
    Separated,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ConvertArgs {
    #[command(flatten)]
    couplings: CouplingArgs,
    /// Convert the couplings to this boundary-condition form
    #[arg(long, value_enum)]
    to: Option<TargetForm>,
    /// Recover couplings from a connected form (--theta, --a11..--a22)
    #[arg(long)]
    from_connected: bool,
    /// Recover couplings from a separated form (--p-plus/--q-plus, --p-minus/--q-minus)
    #[arg(long)]
    from_separated: bool,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    a11: Option<f64>,
    #[arg(long)]
    a12: Option<f64>,
    #[arg(long)]
    a21: Option<f64>,
    #[arg(long)]
    a22: Option<f64>,
    #[arg(long)]
    p_plus: Option<f64>,
    #[arg(long)]
    q_plus: Option<f64>,
    #[arg(long)]
    p_minus: Option<f64>,
    #[arg(long)]
    q_minus: Option<f64>,
    /// Write output to PATH instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ScatterArgs {
    #[command(flatten)]
    couplings: CouplingArgs,
    /// Delta-derivative order n; couplings then depend on k
    #[arg(long, value_name = "N")]
    delta_n: Option<u32>,
    /// Coupling c of the delta-derivative interaction
    #[arg(long, requires = "delta_n")]
    coupling: Option<f64>,
    #[arg(long, default_value_t = 0.1)]
    k_min: f64,
    #[arg(long, default_value_t = 10.0)]
    k_max: f64,
    #[arg(long, default_value_t = 100)]
    k_steps: usize,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct PropagatorArgs {
    /// Delta-prime coupling c
    #[arg(long)]
    coupling: f64,
    /// Evaluate the heat-kernel (imaginary-time) propagator
    #[arg(long)]
    imaginary_time: bool,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long, default_value_t = 0.0)]
    s: f64,
    #[arg(long, default_value_t = -2.0)]
    y_min: f64,
    #[arg(long, default_value_t = 2.0)]
    y_max: f64,
    #[arg(long, default_value_t = 9)]
    y_steps: usize,
    #[arg(long, default_value_t = 1.0)]
    x_min: f64,
    #[arg(long, default_value_t = 1.0)]
    x_max: f64,
    #[arg(long, default_value_t = 1)]
    x_steps: usize,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct BornArgs {
    /// Delta-prime coupling c
    #[arg(long)]
    coupling: f64,
    /// Number of series terms
    #[arg(long, default_value_t = 5)]
    terms: usize,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Jumps,
    Residual,
    ScatterOracle,
    Bc,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Seed for the randomized checks
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override the per-check tolerances (or set POINTKERNEL_TOL; flag wins)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SuperArgs {
    /// Delta-derivative order n >= 1
    #[arg(long)]
    n: u32,
    /// Coupling c
    #[arg(long)]
    coupling: f64,
    /// Wavenumber k > 0
    #[arg(long)]
    k: f64,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Convert(args) => cmd_convert(args),
        Command::Scatter(args) => cmd_scatter(args),
        Command::Propagator(args) => cmd_propagator(args),
        Command::Born(args) => cmd_born(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Supersingular(args) => cmd_supersingular(args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout()),
    })
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn csv_header(out: &mut dyn Write, columns: &str) -> io::Result<()> {
    writeln!(
        out,
        "# pointkernel v{}, command: {}",
        env!("CARGO_PKG_VERSION"),
        command_echo()
    )?;
    writeln!(out, "{columns}")
}

/// Tolerance resolution order: --tol flag, then POINTKERNEL_TOL, then default.
fn resolve_tol(flag: Option<f64>, default: f64) -> f64 {
    flag.or_else(|| {
        std::env::var("POINTKERNEL_TOL")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(default)
}

fn conversion_error_json(e: &Error) -> serde_json::Value {
    let kind = match e {
        Error::NotConnected { .. } => "not_connected",
        Error::NotSeparated { .. } => "not_separated",
        Error::NotRepresentable { .. } => "not_representable",
        _ => "invalid_input",
    };
    json!({ "error": { "kind": kind, "message": e.to_string() } })
}

fn robin_pair_json(pair: &RobinPair) -> serde_json::Value {
    let kind = if pair.is_dirichlet() {
        "dirichlet"
    } else if pair.is_neumann() {
        "neumann"
    } else {
        "robin"
    };
    json!({
        "p": pair.p(),
        "q": pair.q(),
        "kind": kind,
        "b": pair.slope_coefficient(),
        "b_tilde": pair.value_coefficient(),
    })
}

fn interaction_json(pi: &PointInteraction) -> serde_json::Value {
    json!({
        "c1": pi.c1,
        "c2re": pi.c2.re,
        "c2im": pi.c2.im,
        "c3": pi.c3,
    })
}

fn diagnostics_json(pi: &PointInteraction) -> serde_json::Value {
    json!({
        "determinant": pi.determinant(),
        "separated_indicator": separated_indicator(pi),
        "parity_image": interaction_json(&pi.parity()),
    })
}

fn emit_json(out: &Option<PathBuf>, value: &serde_json::Value) -> i32 {
    let mut value = value.clone();
    value["version"] = env!("CARGO_PKG_VERSION").into();
    match open_output(out) {
        Ok(mut w) => {
            let _ = writeln!(
                w,
                "{}",
                serde_json::to_string_pretty(&value).expect("valid json")
            );
            EXIT_OK
        }
        Err(e) => usage_error(&format!("cannot open output: {e}")),
    }
}

fn cmd_convert(args: ConvertArgs) -> i32 {
    let modes =
        args.to.is_some() as u32 + args.from_connected as u32 + args.from_separated as u32;
    if modes != 1 {
        return usage_error(
            "exactly one of --to connected | --to separated | --from-connected | --from-separated is required",
        );
    }

    let result: Result<serde_json::Value, Error> = if let Some(target) = args.to {
        let pi = args.couplings.interaction();
        match target {
            TargetForm::Connected => to_connected(&pi).map(|conn| {
                json!({
                    "form": "connected",
                    "theta": conn.theta,
                    "a11": conn.a11,
                    "a12": conn.a12,
                    "a21": conn.a21,
                    "a22": conn.a22,
                    "diagnostics": diagnostics_json(&pi),
                })
            }),
            TargetForm::Separated => to_separated(&pi).map(|(sep, case)| {
                let case = match case {
                    SeparatedCase::ValueFromSlope => "value_from_slope",
                    SeparatedCase::SlopeFromValue => "slope_from_value",
                    SeparatedCase::MixedDirichletNeumann => "mixed_dirichlet_neumann",
                };
                json!({
                    "form": "separated",
                    "case": case,
                    "side_plus": robin_pair_json(&sep.side_plus),
                    "side_minus": robin_pair_json(&sep.side_minus),
                    "diagnostics": diagnostics_json(&pi),
                })
            }),
        }
    } else if args.from_connected {
        let entries = (args.theta, args.a11, args.a12, args.a21, args.a22);
        let (theta, a11, a12, a21, a22) = match entries {
            (Some(t), Some(a), Some(b), Some(c), Some(d)) => (t, a, b, c, d),
            _ => {
                return usage_error("--from-connected requires --theta, --a11, --a12, --a21, --a22")
            }
        };
        match ConnectedSae::new(theta, a11, a12, a21, a22) {
            Ok(conn) => from_connected(&conn).map(|pi| {
                let mut v = interaction_json(&pi);
                v["form"] = "jump_average".into();
                v["diagnostics"] = diagnostics_json(&pi);
                v
            }),
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        let (pp, qp, pm, qm) = match (args.p_plus, args.q_plus, args.p_minus, args.q_minus) {
            (Some(a), Some(b), Some(c), Some(d)) => (a, b, c, d),
            _ => {
                return usage_error(
                    "--from-separated requires --p-plus, --q-plus, --p-minus, --q-minus",
                )
            }
        };
        match (RobinPair::new(pp, qp), RobinPair::new(pm, qm)) {
            (Ok(side_plus), Ok(side_minus)) => from_separated(&SeparatedSae {
                side_plus,
                side_minus,
            })
            .map(|pi| {
                let mut v = interaction_json(&pi);
                v["form"] = "jump_average".into();
                v["diagnostics"] = diagnostics_json(&pi);
                v
            }),
            (Err(e), _) | (_, Err(e)) => return usage_error(&e.to_string()),
        }
    };

    match result {
        Ok(value) => emit_json(&args.out, &value),
        Err(e) => {
            let code = emit_json(&args.out, &conversion_error_json(&e));
            if code != EXIT_OK {
                code
            } else {
                EXIT_NOT_REPRESENTABLE
            }
        }
    }
}

fn grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        vec![min]
    } else {
        (0..steps)
            .map(|i| min + i as f64 * (max - min) / (steps - 1) as f64)
            .collect()
    }
}

fn cmd_scatter(args: ScatterArgs) -> i32 {
    if !(args.k_min > 0.0) || args.k_max < args.k_min || args.k_steps < 1 {
        return usage_error("need k-min > 0, k-max >= k-min, k-steps >= 1");
    }
    let spec = match (args.delta_n, args.coupling) {
        (Some(n), Some(c)) => match SuperSingularSpec::new(n, c) {
            Ok(s) => Some(s),
            Err(e) => return usage_error(&e.to_string()),
        },
        (Some(_), None) => return usage_error("--delta-n requires --coupling"),
        (None, _) => None,
    };

    let mut out = match open_output(&args.out) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("cannot open output: {e}")),
    };
    let columns = "k,t_plus_re,t_plus_im,t_minus_re,t_minus_im,r_plus_re,r_plus_im,r_minus_re,r_minus_im,transmission,unitarity_defect";
    if csv_header(out.as_mut(), columns).is_err() {
        return usage_error("cannot write output");
    }

    for k in grid(args.k_min, args.k_max, args.k_steps) {
        let pi = match &spec {
            Some(s) => super_singular_interaction(s, k).expect("validated above"),
            None => args.couplings.interaction(),
        };
        let s = scattering(&pi, k).expect("k > 0 validated");
        let row = format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            k,
            s.t_plus.re,
            s.t_plus.im,
            s.t_minus.re,
            s.t_minus.im,
            s.r_plus.re,
            s.r_plus.im,
            s.r_minus.re,
            s.r_minus.im,
            s.transmission_probability(),
            s.unitarity_defect()
        );
        if writeln!(out, "{row}").is_err() {
            return usage_error("cannot write output");
        }
    }
    EXIT_OK
}

fn cmd_propagator(args: PropagatorArgs) -> i32 {
    if args.y_steps < 1 || args.x_steps < 1 || args.y_max < args.y_min || args.x_max < args.x_min {
        return usage_error("need y-max >= y-min, x-max >= x-min, steps >= 1");
    }
    if !(args.t > args.s) {
        return usage_error("need t > s");
    }
    let ys = grid(args.y_min, args.y_max, args.y_steps);
    let xs = grid(args.x_min, args.x_max, args.x_steps);
    if ys.contains(&0.0) || xs.contains(&0.0) {
        return usage_error("grid points must avoid x = 0 and y = 0 (one-sided limits only)");
    }
    let axis = if args.imaginary_time {
        TimeAxis::Imaginary
    } else {
        TimeAxis::Real
    };

    let mut out = match open_output(&args.out) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("cannot open output: {e}")),
    };
    if csv_header(out.as_mut(), "x,y,psi_re,psi_im").is_err() {
        return usage_error("cannot write output");
    }
    for &x in &xs {
        for &y in &ys {
            let v = delta_prime_propagator(args.coupling, y, args.t, x, args.s, axis)
                .expect("grid validated");
            if writeln!(out, "{},{},{},{}", x, y, v.re, v.im).is_err() {
                return usage_error("cannot write output");
            }
        }
    }
    EXIT_OK
}

fn cmd_born(args: BornArgs) -> i32 {
    let series = BornSeries::new(args.coupling, args.terms);
    let closed = closed_form_state(args.coupling);

    let mut out = match open_output(&args.out) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("cannot open output: {e}")),
    };
    if csv_header(out.as_mut(), "term,kind,c_pp,c_pm,c_mp,c_mm,partial_sum_error").is_err() {
        return usage_error("cannot write output");
    }
    if !series.converges() {
        let _ = writeln!(
            out,
            "# warning: term ratio |c|/2 = {} >= 1, partial sums do not converge; the closed form remains valid",
            series.term_ratio()
        );
    }
    for (i, term) in series.terms.iter().enumerate() {
        let (kind, coeffs) = if term.is_pure_mirror() {
            ("mirror", term.mirror)
        } else {
            ("direct", term.direct)
        };
        let err = series.partial_sum(i + 1).max_difference(&closed);
        if writeln!(
            out,
            "{},{},{},{},{},{},{}",
            i + 1,
            kind,
            coeffs[0],
            coeffs[1],
            coeffs[2],
            coeffs[3],
            err
        )
        .is_err()
        {
            return usage_error("cannot write output");
        }
    }
    EXIT_OK
}

fn cmd_supersingular(args: SuperArgs) -> i32 {
    let spec = match SuperSingularSpec::new(args.n, args.coupling) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    if !(args.k > 0.0) {
        return usage_error("need k > 0");
    }
    let pi = super_singular_interaction(&spec, args.k).expect("validated");
    let s = scattering(&pi, args.k).expect("validated");
    let griffiths = check_griffiths_form(&spec, args.k).expect("validated");
    let value = json!({
        "n": args.n,
        "coupling": args.coupling,
        "k": args.k,
        "couplings": interaction_json(&pi),
        "scattering": {
            "t_plus": [s.t_plus.re, s.t_plus.im],
            "t_minus": [s.t_minus.re, s.t_minus.im],
            "r_plus": [s.r_plus.re, s.r_plus.im],
            "r_minus": [s.r_minus.re, s.r_minus.im],
            "transmission": s.transmission_probability(),
            "unitarity_defect": s.unitarity_defect(),
        },
        "griffiths_form_holds": griffiths.pass,
    });
    emit_json(&args.out, &value)
}

struct SuiteRunner {
    out: Box<dyn Write>,
    failures: usize,
}

impl SuiteRunner {
    fn check(&mut self, name: &str, pass: bool, detail: String) {
        if !pass {
            self.failures += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        let _ = writeln!(self.out, "check {name}: {verdict} ({detail})");
    }
}

fn random_interaction(rng: &mut ChaCha8Rng, scale: f64) -> PointInteraction {
    // |c2| bounded by `scale` via rejection from the square
    let c2 = loop {
        let c = Complex64::new(
            rng.random_range(-scale..=scale),
            rng.random_range(-scale..=scale),
        );
        if c.norm() <= scale {
            break c;
        }
    };
    PointInteraction::new(
        rng.random_range(-scale..=scale),
        c2,
        rng.random_range(-scale..=scale),
    )
}

fn suite_jumps(runner: &mut SuiteRunner, tol: f64) {
    let probe = JumpProbe::default();
    let cases: [(&str, PolynomialDensity); 2] = [
        ("constant density", PolynomialDensity::constant(1.0)),
        ("ramp density", PolynomialDensity::ramp(0.0)),
    ];
    for (name, g) in cases {
        match layer_jump_check(&g, 3, 1.0, 0.0, &probe, tol) {
            Ok(report) => runner.check(
                &format!("layer jumps, {name}"),
                report.pass,
                format!("max residual {:.3e} at tol {tol:.1e}", report.max_residual),
            ),
            Err(e) => runner.check(&format!("layer jumps, {name}"), false, e.to_string()),
        }
    }
}

fn residual_probe_grid() -> Vec<Probe> {
    let mut probes = Vec::new();
    for &y in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
        for &x in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
            probes.push(Probe::new(y, 1.0, x, 0.0));
        }
    }
    probes
}

fn suite_residual(runner: &mut SuiteRunner, tol: f64) {
    let probes = residual_probe_grid();
    for c in [0.5, 1.0, 2.0, -2.0] {
        match integral_equation_residual(c, &probes) {
            Ok(r) => runner.check(
                &format!("integral-equation residual, c = {c}"),
                r <= tol,
                format!("max residual {r:.3e} at tol {tol:.1e}"),
            ),
            Err(e) => runner.check(
                &format!("integral-equation residual, c = {c}"),
                false,
                e.to_string(),
            ),
        }
    }
}

fn suite_scatter_oracle(runner: &mut SuiteRunner, seed: u64, tol: f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut worst_defect = 0.0_f64;
    for _ in 0..1000 {
        let pi = random_interaction(&mut rng, 50.0);
        let k = rng.random_range(1e-3..=20.0);
        worst_defect = worst_defect.max(scattering(&pi, k).unwrap().unitarity_defect());
    }
    runner.check(
        "unitarity sweep (1000 draws)",
        worst_defect <= 1e-12,
        format!("max defect {worst_defect:.3e}"),
    );

    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let pi = random_interaction(&mut rng, 10.0);
        let k = rng.random_range(0.05..=20.0);
        let s = scattering(&pi, k).unwrap();
        let left = solve_stationary(&pi, k, Direction::LeftIncoming).unwrap();
        let right = solve_stationary(&pi, k, Direction::RightIncoming).unwrap();
        worst = worst
            .max((left.transmission - s.t_plus).norm())
            .max((left.reflection - s.r_plus).norm())
            .max((right.transmission - s.t_minus).norm())
            .max((right.reflection - s.r_minus).norm());
    }
    runner.check(
        "stationary-solve oracle (1000 draws)",
        worst <= tol,
        format!("max |closed - solved| {worst:.3e} at tol {tol:.1e}"),
    );

    let mut worst = 0.0_f64;
    for n in 1..=6 {
        for c in [-1.0, -0.3, 0.3, 1.0] {
            for k in [0.5, 1.0, 2.0] {
                let spec = SuperSingularSpec::new(n, c).unwrap();
                let pi = super_singular_interaction(&spec, k).unwrap();
                let s = scattering(&pi, k).unwrap();
                let left = solve_stationary(&pi, k, Direction::LeftIncoming).unwrap();
                worst = worst
                    .max((left.transmission - s.t_plus).norm())
                    .max((left.reflection - s.r_plus).norm());
            }
        }
    }
    runner.check(
        "oracle on energy-dependent couplings (n = 1..6)",
        worst <= tol,
        format!("max |closed - solved| {worst:.3e}"),
    );
}

fn suite_bc(runner: &mut SuiteRunner, seed: u64, tol_bc: f64, tol_fd: f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let c = rng.random_range(-3.0..=3.0);
        let sign = if rng.random_range(0..2) == 0 { 1.0 } else { -1.0 };
        let x = sign * rng.random_range(0.1..=2.0);
        let t = rng.random_range(0.05..=2.0);
        for axis in [TimeAxis::Real, TimeAxis::Imaginary] {
            let bd = propagator_boundary_data(c, t, x, 0.0, axis).unwrap();
            let pi = PointInteraction::from_real(0.0, c, 0.0);
            worst = worst.max(check_jump_average(&bd, &pi, tol_bc).max_residual());
        }
    }
    runner.check(
        "propagator boundary data (100 draws, both axes)",
        worst <= tol_bc,
        format!("max residual {worst:.3e} at tol {tol_bc:.1e}"),
    );

    let probe = JumpProbe::default();
    match fd_boundary_check(1.0, 1.0, 1.0, &probe, tol_fd) {
        Ok(report) => runner.check(
            "finite-difference boundary probe (c = 1)",
            report.pass,
            format!(
                "max deviation {:.3e} at tol {tol_fd:.1e}",
                report.max_deviation
            ),
        ),
        Err(e) => runner.check(
            "finite-difference boundary probe (c = 1)",
            false,
            e.to_string(),
        ),
    }

    let dirichlet = fd_boundary_check(-2.0, 1.0, 1.0, &probe, tol_fd)
        .map(|r| r.extrapolated.value_plus.norm());
    let neumann =
        fd_boundary_check(2.0, 1.0, 1.0, &probe, tol_fd).map(|r| r.extrapolated.deriv_plus.norm());
    match (dirichlet, neumann) {
        (Ok(d), Ok(n)) => runner.check(
            "Dirichlet/Neumann sign toggle (c = -2 / +2)",
            d <= tol_fd && n <= tol_fd,
            format!("inside value {d:.3e}, inside slope {n:.3e}"),
        ),
        (Err(e), _) | (_, Err(e)) => runner.check(
            "Dirichlet/Neumann sign toggle (c = -2 / +2)",
            false,
            e.to_string(),
        ),
    }

    let mut all = true;
    let mut worst = 0.0_f64;
    for n in 1..=6 {
        for c in [-2.0, -0.5, 0.5, 2.0] {
            for k in [0.5, 1.0, 3.0] {
                let spec = SuperSingularSpec::new(n, c).unwrap();
                let report = check_griffiths_form(&spec, k).unwrap();
                all &= report.pass;
                worst = worst.max(report.deriv_residual.max(report.value_residual));
            }
        }
    }
    runner.check(
        "derivative-jump form of delta-derivative couplings",
        all,
        format!("max residual {worst:.3e}"),
    );
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let out = match open_output(&args.out) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("cannot open output: {e}")),
    };
    let mut runner = SuiteRunner { out, failures: 0 };

    if matches!(args.suite, Suite::All | Suite::Jumps) {
        suite_jumps(&mut runner, resolve_tol(args.tol, 1e-6));
    }
    if matches!(args.suite, Suite::All | Suite::Residual) {
        suite_residual(&mut runner, resolve_tol(args.tol, 1e-6));
    }
    if matches!(args.suite, Suite::All | Suite::ScatterOracle) {
        suite_scatter_oracle(&mut runner, args.seed, resolve_tol(args.tol, 1e-10));
    }
    if matches!(args.suite, Suite::All | Suite::Bc) {
        suite_bc(
            &mut runner,
            args.seed,
            resolve_tol(args.tol, 1e-12),
            resolve_tol(args.tol, 1e-8),
        );
    }

    let verdict = if runner.failures == 0 { "PASS" } else { "FAIL" };
    let _ = writeln!(
        runner.out,
        "verify: {verdict} ({} failures)",
        runner.failures
    );
    if runner.failures == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}
