//! Independent checks that do not go through the SDP solver: an angular sweep
//! for the numerical radius, randomized lower bounds for its dual, and a
//! combined cross-check report.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{norms, ComplexMatrix, HermitianMatrix};
use crate::radius::{
    dual_numerical_radius, nuclear_norm_sdp, numerical_radius, op_norm_sdp, radius_witness,
    Certificate, NormOptions,
};

pub const DEFAULT_SWEEP_EPS: f64 = 1e-9;
const MIN_GRID: usize = 256;
/// Upper bound on grid points; refinement recovers the remaining accuracy.
const MAX_GRID: usize = 4096;
const REFINED_BRACKETS: usize = 3;
const GOLDEN: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub value: f64,
    /// Maximizing angle in `[0, 2π)`.
    pub theta: f64,
}

/// `max_θ λ_max(cos θ A + sin θ B)` for `C = A + iB`.
pub fn sweep_radius(c: &ComplexMatrix, eps: f64) -> Result<SweepResult> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    let a = c.hermitian_part();
    let b = c.skew_hermitian_part();
    let lipschitz = a.frobenius_norm().hypot(b.frobenius_norm());
    if lipschitz == 0.0 {
        return Ok(SweepResult {
            value: 0.0,
            theta: 0.0,
        });
    }
    let (theta, value) = maximize_periodic(
        |t| a.scale(t.cos()).add_scaled(t.sin(), &b).lambda_max(),
        TAU,
        lipschitz,
        eps,
    )?;
    Ok(SweepResult {
        value,
        theta: theta.rem_euclid(TAU),
    })
}

/// Maximizes a `period`-periodic function with Lipschitz bound `lipschitz`:
/// uniform grid, then golden-section refinement of the best brackets down to
/// width `eps / 10`. Returns `(argmax, max)`.
pub fn maximize_periodic<F>(f: F, period: f64, lipschitz: f64, eps: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidProblem(format!(
            "sweep tolerance must be positive, got {eps}"
        )));
    }
    let wanted = (period * lipschitz / eps).ceil();
    let n = if wanted.is_finite() {
        (wanted as usize).clamp(MIN_GRID, MAX_GRID)
    } else {
        MAX_GRID
    };
    let h = period / n as f64;
    let values = (0..n)
        .map(|i| f(i as f64 * h))
        .collect::<Result<Vec<_>>>()?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let mut best = (order[0] as f64 * h, values[order[0]]);
    for &i in order.iter().take(REFINED_BRACKETS) {
        let center = i as f64 * h;
        let (t, v) = golden_max(&f, center - h, center + h, eps / 10.0)?;
        if v > best.1 {
            best = (t, v);
        }
    }
    Ok(best)
}

fn golden_max<F>(f: &F, mut lo: f64, mut hi: f64, width: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    // Stops at the width target or when floating point can no longer shrink.
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 >= f2 { (x1, f1) } else { (x2, f2) })
}

/// `max { λ_max(xA + yB) : x² + y² ≤ 1 }` for Hermitian `A`, `B`.
pub fn disk_max(a: &HermitianMatrix, b: &HermitianMatrix, eps: f64) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "disk_max needs equal sizes, got {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let c = ComplexMatrix::from_fn(a.dim(), a.dim(), |i, j| {
        a[(i, j)] + Complex64::i() * b[(i, j)]
    });
    // The circle maximum is already nonnegative since g(θ) + g(θ + π) ≥ 0;
    // the clamp covers the origin of the disk explicitly.
    Ok(sweep_radius(&c, eps)?.value.max(0.0))
}

/// Largest `Re tr(F*C)` over random `F` normalized to `r(F) = 1`, plus two
/// structured candidates: `C / r(C)` and the extreme point `e^{iθ} xx*` from
/// the radius witness. Every candidate is feasible, so this bounds `r∨(C)`
/// from below.
pub fn dual_lower_bound(c: &ComplexMatrix, trials: usize, seed: u64) -> Result<f64> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    if c.is_zero() {
        return Ok(0.0);
    }
    let n = c.rows();
    let pairing = |f: &ComplexMatrix| f.adjoint().matmul(c).trace().re;

    let r = sweep_radius(c, DEFAULT_SWEEP_EPS)?.value;
    let mut best = pairing(c) / r;
    if let Certificate::RadiusWitness { theta, x } = radius_witness(c)? {
        let phase = Complex64::from_polar(1.0, theta);
        let extreme = ComplexMatrix::from_fn(n, n, |i, j| phase * x[i] * x[j].conj());
        best = best.max(pairing(&extreme));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let f = ComplexMatrix::from_fn(n, n, |_, _| {
            Complex64::new(
                StandardNormal.sample(&mut rng),
                StandardNormal.sample(&mut rng),
            )
        });
        let rf = sweep_radius(&f, DEFAULT_SWEEP_EPS)?.value;
        if rf > 0.0 {
            best = best.max(pairing(&f) / rf);
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug)]
pub struct CrosscheckOptions {
    pub seed: u64,
    pub trials: usize,
    /// Relative tolerance for every comparison.
    pub tol: f64,
    pub norm: NormOptions,
}

impl Default for CrosscheckOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 64,
            tol: 1e-6,
            norm: NormOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Amount by which the check is violated; zero or negative when it holds.
    pub discrepancy: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Values {
    pub r_sdp: f64,
    pub r_sweep: f64,
    pub rdual_sdp: f64,
    pub rdual_lower: f64,
    pub opnorm_sdp: f64,
    pub opnorm_svd: f64,
    pub nuclear_sdp: f64,
    pub nuclear_svd: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrosscheckReport {
    pub values: Option<Values>,
    pub checks: Vec<Check>,
    /// Failures from individual computations.
    pub errors: Vec<String>,
    pub all_passed: bool,
}

/// Compares every SDP value with its independent oracle and with the norm
/// inequalities `‖C‖/2 ≤ r(C) ≤ ‖C‖` and `‖C‖∨ ≤ r∨(C) ≤ 2‖C‖∨`.
pub fn crosscheck(c: &ComplexMatrix, opts: &CrosscheckOptions) -> Result<CrosscheckReport> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    let mut errors = Vec::new();
    let mut grab = |label: &str, v: Result<f64>| match v {
        Ok(x) => Some(x),
        Err(e) => {
            errors.push(format!("{label}: {e}"));
            None
        }
    };
    let no_cert = NormOptions {
        certificate: false,
        ..opts.norm
    };
    let converged = |r: crate::radius::NormResult| {
        if r.converged() {
            Ok(r.value)
        } else {
            Err(Error::NoConvergence {
                dim: c.rows(),
                residual: r.gap,
            })
        }
    };
    let svd = norms(c);
    let values = (|| {
        Some(Values {
            r_sdp: grab("r (sdp)", numerical_radius(c, &no_cert).and_then(converged))?,
            r_sweep: grab(
                "r (sweep)",
                sweep_radius(c, DEFAULT_SWEEP_EPS).map(|s| s.value),
            )?,
            rdual_sdp: grab(
                "rdual (sdp)",
                dual_numerical_radius(c, &no_cert).and_then(converged),
            )?,
            rdual_lower: grab(
                "rdual (lower bound)",
                dual_lower_bound(c, opts.trials, opts.seed),
            )?,
            opnorm_sdp: grab("opnorm (sdp)", op_norm_sdp(c, &no_cert).and_then(converged))?,
            opnorm_svd: grab("opnorm (svd)", svd.clone().map(|n| n.op))?,
            nuclear_sdp: grab(
                "nuclear (sdp)",
                nuclear_norm_sdp(c, &no_cert).and_then(converged),
            )?,
            nuclear_svd: grab("nuclear (svd)", svd.clone().map(|n| n.nuclear))?,
        })
    })();

    let mut checks = Vec::new();
    if let Some(v) = &values {
        let tol = opts.tol;
        let mut push = |name: &str, discrepancy: f64, scale: f64| {
            let tolerance = tol * scale.max(1.0);
            checks.push(Check {
                name: name.to_string(),
                passed: discrepancy <= tolerance,
                discrepancy,
                tolerance,
            });
        };
        push(
            "r_sdp_matches_sweep",
            (v.r_sdp - v.r_sweep).abs(),
            v.r_sweep,
        );
        push(
            "rdual_above_lower_bound",
            v.rdual_lower - v.rdual_sdp,
            v.rdual_sdp,
        );
        push(
            "opnorm_sdp_matches_svd",
            (v.opnorm_sdp - v.opnorm_svd).abs(),
            v.opnorm_svd,
        );
        push(
            "nuclear_sdp_matches_svd",
            (v.nuclear_sdp - v.nuclear_svd).abs(),
            v.nuclear_svd,
        );
        push(
            "r_at_least_half_opnorm",
            v.opnorm_svd / 2.0 - v.r_sdp,
            v.opnorm_svd,
        );
        push("r_at_most_opnorm", v.r_sdp - v.opnorm_svd, v.opnorm_svd);
        push(
            "rdual_at_least_nuclear",
            v.nuclear_svd - v.rdual_sdp,
            v.nuclear_svd,
        );
        push(
            "rdual_at_most_twice_nuclear",
            v.rdual_sdp - 2.0 * v.nuclear_svd,
            v.nuclear_svd,
        );
    }
    let all_passed = errors.is_empty() && checks.iter().all(|c| c.passed);
    Ok(CrosscheckReport {
        values,
        checks,
        errors,
        all_passed,
    })
}
