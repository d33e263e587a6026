use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use c2_monopole::coords::R3Point;
use c2_monopole::error::Error;
use c2_monopole::monopole::{gauge_potential, magnetic_field, make_state, parse_charge};
use c2_monopole::restricted::RestrictedPoly;
use c2_monopole::verify::{self, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "monopole",
    version,
    about = "Quantum mechanics on C² and its monopole sector"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldFormat {
    Csv,
    Json,
}

fn charge(s: &str) -> Result<i64, String> {
    parse_charge(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity suite over the (κ, δ) grid.
    Verify {
        #[arg(long, default_value_t = 4)]
        kappa_max: u32,
        /// Fix δ instead of sweeping −κ..κ.
        #[arg(long, value_parser = charge, allow_hyphen_values = true)]
        delta: Option<i64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 1e-5)]
        fd_tol: f64,
        #[arg(long, default_value_t = 1e-4)]
        curl_tol: f64,
        #[arg(long, default_value_t = 1e-3)]
        flux_tol: f64,
        #[arg(long, default_value_t = 3.0)]
        sigmas: f64,
        #[arg(long, default_value_t = 1e-5)]
        fd_step: f64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export A and B on a spherical shell.
    Field {
        #[arg(long, value_parser = charge, allow_hyphen_values = true)]
        kappa: i64,
        #[arg(long, value_parser = charge, allow_hyphen_values = true, default_value = "0")]
        delta: i64,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 10)]
        n_theta: usize,
        #[arg(long, default_value_t = 10)]
        n_phi: usize,
        #[arg(long, value_enum, default_value_t = FieldFormat::Csv)]
        format: FieldFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate Φ(x)·ξ_κ at points given in Euler coordinates.
    State {
        /// Restricted factor, e.g. "2*x1^2 x3 - r^-1".
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, value_parser = charge, allow_hyphen_values = true)]
        kappa: i64,
        #[arg(long, value_parser = charge, allow_hyphen_values = true, default_value = "0")]
        delta: i64,
        /// r,θ,φ,γ; repeatable.
        #[arg(long = "point", value_parser = euler_point, allow_hyphen_values = true)]
        points: Vec<[f64; 4]>,
    },
}

fn euler_point(s: &str) -> Result<[f64; 4], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into()
        .map_err(|_| "expected r,theta,phi,gamma".to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_)
            | Error::Parse { .. }
            | Error::NonIntegerCharge(_)
            | Error::NotRestricted(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct FieldRow {
    x1: f64,
    x2: f64,
    x3: f64,
    A1: f64,
    A2: f64,
    A3: f64,
    B1: f64,
    B2: f64,
    B3: f64,
}

fn field_rows(
    kappa: i64,
    delta: i64,
    r: f64,
    n_theta: usize,
    n_phi: usize,
) -> Result<Vec<FieldRow>, Failure> {
    if !(r > 0.0 && r.is_finite()) || n_theta == 0 || n_phi == 0 {
        return Err(Failure::Usage("need r > 0 and a non-empty grid".into()));
    }
    let pot = gauge_potential(kappa, delta);
    let mut rows = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let t = PI * (i as f64 + 0.5) / n_theta as f64;
        for j in 0..n_phi {
            let p = 2.0 * PI * (j as f64 + 0.5) / n_phi as f64 - PI;
            let sph = pot.spherical_real(r, t, p)?;
            let a = c2_monopole::numerics::spherical_to_cartesian(sph, t, p);
            let x = R3Point::from_spherical(r, t, p);
            let b = magnetic_field(kappa, &x)?;
            rows.push(FieldRow {
                x1: x.0[0],
                x2: x.0[1],
                x3: x.0[2],
                A1: a[0],
                A2: a[1],
                A3: a[2],
                B1: b[0],
                B2: b[1],
                B3: b[2],
            });
        }
    }
    Ok(rows)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Command::Verify {
            kappa_max,
            delta,
            seed,
            tol,
            fd_tol,
            curl_tol,
            flux_tol,
            sigmas,
            fd_step,
            samples,
            format,
            out,
        } => {
            let cfg = VerifyConfig {
                kappa_max,
                delta,
                seed,
                tol,
                fd_tol,
                curl_tol,
                flux_tol,
                sigmas,
                fd_step,
                samples,
            };
            cfg.validate()?;
            let start = Instant::now();
            let report = verify::run(&cfg)?;
            let body = match format {
                ReportFormat::Json => report.to_json() + "\n",
                ReportFormat::Text => {
                    format!("{}elapsed: {:.2?}\n", report.to_text(), start.elapsed())
                }
            };
            emit(&out, &body)?;
            if out.is_some() {
                let failed = report.failures().count();
                println!("verdict: {:?} ({failed} failed)", report.verdict);
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Field {
            kappa,
            delta,
            r,
            n_theta,
            n_phi,
            format,
            out,
        } => {
            let rows = field_rows(kappa, delta, r, n_theta, n_phi)?;
            let body = match format {
                FieldFormat::Json => {
                    serde_json::to_string_pretty(&rows).expect("finite rows") + "\n"
                }
                FieldFormat::Csv => {
                    let mut s = String::from("x1,x2,x3,A1,A2,A3,B1,B2,B3\n");
                    for w in &rows {
                        let vals = [w.x1, w.x2, w.x3, w.A1, w.A2, w.A3, w.B1, w.B2, w.B3];
                        let cells: Vec<String> = vals.iter().map(|v| format!("{v:.16e}")).collect();
                        s += &cells.join(",");
                        s.push('\n');
                    }
                    s
                }
            };
            emit(&out, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::State {
            phi,
            kappa,
            delta,
            points,
        } => {
            let poly: RestrictedPoly = phi.parse()?;
            let phi = poly.to_symfunc();
            let state = make_state(phi.clone(), kappa, delta)?;
            let full = state.full();
            let points = if points.is_empty() {
                vec![[1.0, PI / 2.0, 0.0, 0.0]]
            } else {
                points
            };
            println!("# Φ = {poly}, κ = {kappa}, δ = {delta}, μ = {}", state.mu());
            println!("# r theta phi gamma | Re Φκ  Im Φκ | |Φκ|²  |Φ|² (κ=0)  match");
            for [r, t, p, g] in points {
                let v = full.eval_along_angles(r, t, p, g)?;
                let v0 = phi.eval_along_angles(r, t, p, g)?;
                let (d, d0) = (v.norm_sqr(), v0.norm_sqr());
                let ok = (d - d0).abs() <= 1e-12 * (1.0 + d0);
                println!(
                    "{r} {t} {p} {g} | {:.12e} {:.12e} | {d:.12e} {d0:.12e} {}",
                    v.re,
                    v.im,
                    if ok { "yes" } else { "no" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
