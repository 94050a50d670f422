//! `nr` command-line front end.
//!
//! Exit codes: 0 success, 1 input parse error, 2 solver non-convergence,
//! 3 dimension or shape error, 4 a cross-check comparison failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::io::{read_matrix, read_tensor};
use crate::linalg::norms;
use crate::oracle::{crosscheck, sweep_radius, CrosscheckOptions};
use crate::radius::{
    dual_numerical_radius, nuclear_norm_sdp, numerical_radius, op_norm_sdp, radius_witness,
    Certificate, NormOptions, NormResult,
};
use crate::sdp::SolveOptions;
use crate::tensor::{tensor_nuclear, tensor_spectral};

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_NO_CONVERGENCE: i32 = 2;
pub const EXIT_SHAPE: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "nr",
    version,
    about = "Numerical radius and related norms via SDP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical radius r(C).
    R {
        path: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 500)]
        max_iter: usize,
        #[arg(long, value_enum, default_value_t = RadiusMethod::Ipm)]
        method: RadiusMethod,
        /// Attach a maximizing angle and unit vector.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dual numerical radius r∨(C).
    Rdual {
        path: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 500)]
        max_iter: usize,
        /// Attach a decomposition of C into rank-one extreme points.
        #[arg(long)]
        certificate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Operator norm.
    Opnorm {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = NormMethod::Ipm)]
        method: NormMethod,
        #[arg(long)]
        json: bool,
    },
    /// Nuclear norm.
    Nuclear {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = NormMethod::Ipm)]
        method: NormMethod,
        #[arg(long)]
        json: bool,
    },
    /// Spectral or nuclear norm of a 2×m×n tensor.
    Tensor {
        #[arg(value_enum)]
        kind: TensorKind,
        path: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Compare every SDP value against its independent oracle.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RadiusMethod {
    Ipm,
    Sweep,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NormMethod {
    Ipm,
    Svd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TensorKind {
    Spectral,
    Nuclear,
}

#[derive(Debug, Serialize)]
struct Output {
    quantity: &'static str,
    value: f64,
    gap: Option<f64>,
    iterations: Option<usize>,
    method: &'static str,
    certificate: Option<Certificate>,
}

impl Output {
    fn from_result(r: NormResult, method: &'static str) -> Self {
        Self {
            quantity: r.quantity.short_name(),
            value: r.value,
            gap: Some(r.gap),
            iterations: Some(r.iterations),
            method,
            certificate: r.certificate,
        }
    }

    fn direct(quantity: &'static str, value: f64, method: &'static str) -> Self {
        Self {
            quantity,
            value,
            gap: None,
            iterations: None,
            method,
            certificate: None,
        }
    }
}

enum Failure {
    Error(Error),
    NotConverged(NormResult),
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

/// Parses `args` (including the program name), runs the command, and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::NotConverged(r)) => {
            let _ = writeln!(
                err,
                "error: solver did not converge ({:?}); gap {:e} after {} iterations",
                r.status, r.gap, r.iterations
            );
            EXIT_NO_CONVERGENCE
        }
        Err(Failure::CheckFailed) => EXIT_CHECK_FAILED,
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::NonFinite { .. } | Error::InvalidProblem(_) => EXIT_PARSE,
        Error::Shape { .. } | Error::DimensionMismatch(_) | Error::NotSquare { .. } => EXIT_SHAPE,
        Error::NoConvergence { .. }
        | Error::MissingStart
        | Error::NumericalFailure(_)
        | Error::NotFeasible { .. }
        | Error::InconsistentKernel { .. } => EXIT_NO_CONVERGENCE,
    }
}

fn solver_options(tol: f64, max_iter: usize) -> Result<NormOptions, Failure> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Parse(format!("--tol must be a positive number, got {tol}")).into());
    }
    Ok(NormOptions {
        solver: SolveOptions {
            eps_gap: tol / 10.0,
            eps_feas: tol,
            max_iter,
        },
        certificate: false,
    })
}

fn converged(r: NormResult) -> Result<NormResult, Failure> {
    if r.converged() {
        Ok(r)
    } else {
        Err(Failure::NotConverged(r))
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let (output, json) = match command {
        Command::R {
            path,
            tol,
            max_iter,
            method,
            witness,
            json,
        } => {
            let c = read_matrix(&path)?;
            let opts = solver_options(tol, max_iter)?;
            let output = match method {
                RadiusMethod::Ipm => {
                    let r = converged(numerical_radius(&c, &opts)?)?;
                    Output::from_result(r, "ipm")
                }
                RadiusMethod::Sweep => Output::direct("r", sweep_radius(&c, tol)?.value, "sweep"),
            };
            let certificate = if witness && !c.is_zero() {
                Some(radius_witness(&c)?)
            } else {
                None
            };
            (
                Output {
                    certificate,
                    ..output
                },
                json,
            )
        }
        Command::Rdual {
            path,
            tol,
            max_iter,
            certificate,
            json,
        } => {
            let c = read_matrix(&path)?;
            let opts = NormOptions {
                certificate,
                ..solver_options(tol, max_iter)?
            };
            let r = converged(dual_numerical_radius(&c, &opts)?)?;
            (Output::from_result(r, "ipm"), json)
        }
        Command::Opnorm { path, method, json } => (matrix_norm(&path, method, false)?, json),
        Command::Nuclear { path, method, json } => (matrix_norm(&path, method, true)?, json),
        Command::Tensor {
            kind,
            path,
            tol,
            json,
        } => {
            let t = read_tensor(&path)?;
            let opts = solver_options(tol, 500)?;
            let r = match kind {
                TensorKind::Spectral => tensor_spectral(&t, &opts)?,
                TensorKind::Nuclear => tensor_nuclear(&t, &opts)?,
            };
            (Output::from_result(converged(r)?, "ipm"), json)
        }
        Command::Check {
            path,
            seed,
            trials,
            json,
        } => {
            let c = read_matrix(&path)?;
            let report = crosscheck(
                &c,
                &CrosscheckOptions {
                    seed,
                    trials,
                    ..Default::default()
                },
            )?;
            if json {
                write_json(out, &report);
            } else {
                if let Some(v) = &report.values {
                    let _ = writeln!(
                        out,
                        "r        sdp {}  sweep {}",
                        sig(v.r_sdp),
                        sig(v.r_sweep)
                    );
                    let _ = writeln!(
                        out,
                        "rdual    sdp {}  lower {}",
                        sig(v.rdual_sdp),
                        sig(v.rdual_lower)
                    );
                    let _ = writeln!(
                        out,
                        "opnorm   sdp {}  svd   {}",
                        sig(v.opnorm_sdp),
                        sig(v.opnorm_svd)
                    );
                    let _ = writeln!(
                        out,
                        "nuclear  sdp {}  svd   {}",
                        sig(v.nuclear_sdp),
                        sig(v.nuclear_svd)
                    );
                }
                for check in &report.checks {
                    let _ = writeln!(
                        out,
                        "{} {} (discrepancy {:e}, tolerance {:e})",
                        if check.passed { "PASS" } else { "FAIL" },
                        check.name,
                        check.discrepancy,
                        check.tolerance
                    );
                }
                for e in &report.errors {
                    let _ = writeln!(out, "ERROR {e}");
                }
            }
            return if report.all_passed {
                Ok(())
            } else {
                Err(Failure::CheckFailed)
            };
        }
    };
    print_output(out, &output, json);
    Ok(())
}

fn matrix_norm(
    path: &std::path::Path,
    method: NormMethod,
    nuclear: bool,
) -> Result<Output, Failure> {
    let c = read_matrix(path)?;
    let quantity = if nuclear { "nuclear" } else { "opnorm" };
    Ok(match method {
        NormMethod::Svd => {
            let n = norms(&c)?;
            Output::direct(quantity, if nuclear { n.nuclear } else { n.op }, "svd")
        }
        NormMethod::Ipm => {
            let opts = NormOptions::default();
            let r = if nuclear {
                nuclear_norm_sdp(&c, &opts)?
            } else {
                op_norm_sdp(&c, &opts)?
            };
            Output::from_result(converged(r)?, "ipm")
        }
    })
}

fn print_output(out: &mut dyn Write, o: &Output, json: bool) {
    if json {
        write_json(out, o);
        return;
    }
    let _ = writeln!(out, "{} = {}", o.quantity, sig(o.value));
    let _ = writeln!(out, "method: {}", o.method);
    if let (Some(gap), Some(it)) = (o.gap, o.iterations) {
        let _ = writeln!(out, "gap: {}  iterations: {it}", sig(gap));
    }
    if let Some(cert) = &o.certificate {
        let text = serde_json::to_string(cert).unwrap_or_default();
        let _ = writeln!(out, "certificate: {text}");
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) {
    let text = serde_json::to_string_pretty(value).unwrap_or_default();
    let _ = writeln!(out, "{text}");
}

/// Twelve significant digits.
pub fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.11}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}
